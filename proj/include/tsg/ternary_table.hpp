#ifndef TSG_TERNARY_TABLE_HPP
#define TSG_TERNARY_TABLE_HPP

#include <array>
#include <optional>
#include <vector>

#include "tsg/errors.hpp"
#include "tsg/subset.hpp"

namespace tsg {

using Elem = int;

// Finite ternary multiplication on {0..n-1}: an n x n x n result cube
// stored flat, entry for the product abc at index a*n^2 + b*n + c.
//
// The associativity flag is only ever set after a full n^5 check; consumers
// that require a ternary semigroup call require_associative().
class TernaryTable {
  public:
    TernaryTable() : n_(0) {}
    TernaryTable(int n, std::vector<Elem> cube);

    template <typename F>
    static TernaryTable from_function(int n, F&& f) {
        std::vector<Elem> cube(size_t(n) * n * n);
        size_t idx = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) cube[idx++] = f(a, b, c);
        return TernaryTable(n, std::move(cube));
    }

    int order() const { return n_; }
    const std::vector<Elem>& cube() const { return cube_; }

    size_t index(Elem a, Elem b, Elem c) const { return (size_t(a) * n_ + b) * n_ + c; }
    Elem at(Elem a, Elem b, Elem c) const { return cube_[index(a, b, c)]; }

    // Runs the full n^5 associativity check and records the result.
    bool verify_associativity();
    bool known_associative() const { return assoc_verified_; }

    bool operator==(const TernaryTable& o) const { return n_ == o.n_ && cube_ == o.cube_; }
    bool operator!=(const TernaryTable& o) const { return !(*this == o); }

  private:
    int n_;
    std::vector<Elem> cube_;
    bool assoc_verified_ = false;
};

// Bounds-checked cube lookup.
Elem mul3(const TernaryTable& t, Elem a, Elem b, Elem c);

struct AssociativityResult {
    bool ok;
    // First violating quintuple (a,b,c,d,e) in lexicographic order when !ok.
    std::array<Elem, 5> witness;
};

// Checks (abc)de = a(bcd)e = ab(cde) over all n^5 quintuples.
AssociativityResult is_ternary_semigroup(const TernaryTable& t);

// Throws StateError unless t is associative (flag or full check).
void require_associative(const TernaryTable& t);

// { abc : a in A, b in B, c in C }.
SubSet set_product(const TernaryTable& t, const SubSet& a, const SubSet& b, const SubSet& c);

// SSI, SIS and ISS all contained in I.  I must be non-empty.
bool is_ideal(const TernaryTable& t, const SubSet& ideal);

// The unique b with abx = bax = xab = xba = x for all x, if any.
// Two distinct candidates contradict uniqueness and raise StructuralError.
std::optional<Elem> inverse_of(const TernaryTable& t, Elem a);

// Solvability of abx = c, axb = c and xab = c for all a,b,c.
bool is_ternary_group(const TernaryTable& t);

// Table of t restricted to the elements of h (reindexed 0..|h|-1).
// Requires h closed under the operation.
TernaryTable restrict_table(const TernaryTable& t, const SubSet& h);

// HHH contained in H and the restricted table is a ternary group.
bool is_ternary_subgroup(const TernaryTable& t, const SubSet& h);

// aNN / NNa.  N must be a ternary subgroup of the ternary group t.
SubSet left_coset(const TernaryTable& t, const SubSet& n, Elem a);
SubSet right_coset(const TernaryTable& t, const SubSet& n, Elem a);

struct NormalityReport {
    bool normal;               // the verdict, taken from condition (b)
    bool cond_b;               // ghH = Hgh for all g,h
    bool cond_c;               // HHg = gHH = HgH for all g
    int a_evaluated;           // elements g for which an inverse existed
    bool a_all_hold;           // gHg^-1 in H for every evaluated g
    bool a_fully_evaluated;    // every g had an inverse
};

// Evaluates the three normality conditions; the verdict is condition (b).
// A genuine disagreement between evaluated conditions raises StructuralError.
NormalityReport is_normal_subgroup(const TernaryTable& t, const SubSet& h);

// Applies the carrier relabeling perm (new = perm[old]) to the table.
TernaryTable relabel(const TernaryTable& t, const std::vector<int>& perm);

// Lexicographically minimal cube over all carrier permutations.
TernaryTable canonical_form(const TernaryTable& t);
bool is_canonical(const TernaryTable& t);

}  // namespace tsg

#endif  // TSG_TERNARY_TABLE_HPP
