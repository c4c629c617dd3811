#ifndef TSG_GROUP_TABLE_HPP
#define TSG_GROUP_TABLE_HPP

#include <string>
#include <vector>

#include "tsg/ternary_table.hpp"

namespace tsg {

// Finite (binary) group: substrate for heap construction and for the
// non-commutative test instances.
class GroupTable {
  public:
    GroupTable() : n_(0), identity_(0) {}
    GroupTable(int n, std::vector<int> table);

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[size_t(a) * n_ + b]; }
    int identity() const { return identity_; }
    int inverse(int a) const { return inverse_[a]; }

    static GroupTable cyclic(int n);
    // Closure of the given permutations (one-line notation) under
    // composition; elements ordered lexicographically by one-line form.
    static GroupTable from_permutations(int degree, const std::vector<std::vector<int>>& gens);
    static GroupTable symmetric(int degree);   // S_degree, degree <= 5
    static GroupTable dihedral(int sides);     // D_sides, order 2*sides

  private:
    void validate() const;

    int n_;
    std::vector<int> table_;
    int identity_;
    std::vector<int> inverse_;
};

// abc = (a + b + c) mod n.
TernaryTable cyclic_ternary(int n);

// Heap of a group: [abc] = a * b^-1 * c. Associative only for abelian
// substrates; non-abelian input raises ArgumentError.
TernaryTable heap_from_group(const GroupTable& g);

// [abc] = a * b * c. Associative for every group, so this is the generator
// of non-commutative ternary groups.
TernaryTable group_ternary(const GroupTable& g);

// abc = min(a, b, c).
TernaryTable min_table(int n);

// abc = (a * b * c) mod n.
TernaryTable product_table(int n);

// abc = value, constantly.
TernaryTable constant_table(int n, Elem value);

}  // namespace tsg

#endif  // TSG_GROUP_TABLE_HPP
