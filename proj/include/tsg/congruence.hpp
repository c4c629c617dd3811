#ifndef TSG_CONGRUENCE_HPP
#define TSG_CONGRUENCE_HPP

#include <array>
#include <utility>
#include <vector>

#include "tsg/element_map.hpp"
#include "tsg/partition.hpp"
#include "tsg/ternary_table.hpp"

namespace tsg {

struct CongruenceResult {
    bool ok = true;
    // Lex-first (a,b,c,d,e,f) with (a,b),(c,d),(e,f) related but abc=ace,bdf
    // landing in different classes. Valid when !ok.
    std::array<Elem, 6> witness{};
};

// Theorem 2.8 criterion: (a,b),(c,d),(e,f) in rho implies (ace,bdf) in rho.
// Scans related pairs per class instead of all n^6 sextuples.
CongruenceResult is_congruence(const TernaryTable& t, const Partition& p);

// Smallest congruence containing the given pairs: fixpoint merging
// (sta,stb), (sat,sbt), (ast,bst) over all s,t for every merged pair (a,b).
Partition congruence_closure(const TernaryTable& t, const std::vector<std::pair<int, int>>& pairs);

// (I x I) u diagonal. Requires I to be an ideal.
Partition rees_congruence(const TernaryTable& t, const SubSet& ideal);

struct QuotientResult {
    TernaryTable table;
    ElementMap natural_map;
    std::vector<Elem> representatives;  // min element of each class
};

// Quotient table over class ids, products computed from representatives.
// Well-definedness re-verified across all representative choices when n <= 8.
QuotientResult quotient_semigroup(const TernaryTable& t, const Partition& p);

// pi(f(a,b,c)) == g(pi(a),pi(b),pi(c)) for all triples.
bool verify_diagram(const TernaryTable& t, const Partition& p);

// All congruences of t in canonical order. n <= 10; exhausts partitions for
// n <= 7 and walks the join lattice over principal congruences above that.
std::vector<Partition> enumerate_congruences(const TernaryTable& t);

}  // namespace tsg

#endif  // TSG_CONGRUENCE_HPP
