#ifndef TSG_TOPOLOGY_HPP
#define TSG_TOPOLOGY_HPP

#include <optional>
#include <vector>

#include "tsg/element_map.hpp"
#include "tsg/errors.hpp"
#include "tsg/subset.hpp"
#include "tsg/ternary_table.hpp"

namespace tsg {

// Topology on {0..n-1} as an explicit open-set family. The constructor
// checks the axioms; the family is kept sorted and deduplicated, so equal
// topologies compare equal member-for-member. Family size is capped at 2^16.
class FiniteTopology {
  public:
    FiniteTopology() : n_(0), family_{SubSet(0)}, min_nbhds_{} {}
    FiniteTopology(int n, std::vector<SubSet> family);

    static FiniteTopology discrete(int n);
    static FiniteTopology indiscrete(int n);

    int order() const { return n_; }
    const std::vector<SubSet>& opens() const { return family_; }
    bool is_open(const SubSet& u) const;
    bool is_closed(const SubSet& u) const { return is_open(u.complement()); }

    // Smallest open set containing x; every finite topology has one.
    const SubSet& min_nbhd(int x) const;

    bool operator==(const FiniteTopology& o) const { return n_ == o.n_ && family_ == o.family_; }
    bool operator!=(const FiniteTopology& o) const { return !(*this == o); }
    bool operator<(const FiniteTopology& o) const {
        return n_ != o.n_ ? n_ < o.n_ : family_ < o.family_;
    }

  private:
    int n_;
    std::vector<SubSet> family_;
    std::vector<SubSet> min_nbhds_;
};

FiniteTopology topology_from_subbasis(int n, const std::vector<SubSet>& sets);

// Explicit product families; carrier capped at 512 points and the family at
// 2^16 members. Pair points are indexed a*n2 + b, triples (a*n2 + b)*n3 + c.
FiniteTopology product_topology(const FiniteTopology& t1, const FiniteTopology& t2);
FiniteTopology product_topology(const FiniteTopology& t1, const FiniteTopology& t2,
                                const FiniteTopology& t3);

// Final topology: U open iff the preimage of U is open. Target order <= 16.
FiniteTopology quotient_topology(const FiniteTopology& tx, const ElementMap& q);

bool is_continuous(const ElementMap& f, const FiniteTopology& tx, const FiniteTopology& ty);
bool is_open_map(const ElementMap& f, const FiniteTopology& tx, const FiniteTopology& ty);
bool is_closed_map(const ElementMap& f, const FiniteTopology& tx, const FiniteTopology& ty);

// Surjective + continuous + the target family equals the final topology.
bool is_quotient_map(const ElementMap& f, const FiniteTopology& tx, const FiniteTopology& ty);

SubSet closure(const FiniteTopology& t, const SubSet& a);
SubSet interior(const FiniteTopology& t, const SubSet& a);

// Pairwise separation scan over the open family; the finite-space fact that
// Hausdorff means discrete is asserted as a cross-check, never used to
// answer.
bool is_hausdorff(const FiniteTopology& t);

// Union of the fibers of q meeting a.
SubSet saturate(const ElementMap& q, const SubSet& a);

// Points whose whole fiber lies inside v.
SubSet saturated_interior(const ElementMap& q, const SubSet& v);

struct SeparatingBox {
    SubSet p, q, r;
};

// Opens P >= A, Q >= B, R >= C with f(P x Q x R) <= D, built as unions of
// minimal neighborhoods over the points of A, B, C. Requires f continuous
// from the product of tx,ty,tz to tw, D open, and f(A x B x C) <= D; under
// those preconditions a box always exists.
std::optional<SeparatingBox> find_separating_box(const ElementMap& f, const FiniteTopology& tx,
                                                 const FiniteTopology& ty, const FiniteTopology& tz,
                                                 const FiniteTopology& tw, const SubSet& a,
                                                 const SubSet& b, const SubSet& c, const SubSet& d);

// A closed in t iff A's trace on every part is closed in the subspace
// topology. Exhaustive over all 2^n subsets; n <= 16.
bool is_weak_topology_sum(const FiniteTopology& t, const std::vector<SubSet>& parts);

// Every point outside the closed ideal I is separated from I by disjoint
// opens.
bool is_regular_ideal(const TernaryTable& t, const FiniteTopology& ts, const SubSet& ideal);

// Topology on S minus the interior of I whose opens are traces of opens of S
// that either miss I or contain it; surviving points are reindexed in
// ascending order.
FiniteTopology rees_space(const FiniteTopology& ts, const SubSet& ideal);

// The surviving carrier of rees_space as a subset of S.
SubSet rees_carrier(const FiniteTopology& ts, const SubSet& ideal);

// Every topology on n points, n <= 4, in canonical order.
std::vector<FiniteTopology> all_topologies(int n);

// Product of explicit factor topologies represented by minimal neighborhoods
// only; the product family itself is never materialized, so carriers like
// S^3 for order-8 S stay tractable. Points are mixed-radix with the last
// factor fastest, matching product_topology.
class ProductView {
  public:
    ProductView(const FiniteTopology& t1, const FiniteTopology& t2);
    ProductView(const FiniteTopology& t1, const FiniteTopology& t2, const FiniteTopology& t3);

    int order() const { return total_; }
    SubSet min_nbhd(int point) const;
    bool is_open(const SubSet& u) const;
    bool is_closed(const SubSet& u) const { return is_open(u.complement()); }

  private:
    void init(const std::vector<const FiniteTopology*>& factors);

    std::vector<int> orders_;
    std::vector<std::vector<SubSet>> factor_nbhds_;
    int total_ = 0;
};

bool is_continuous(const ElementMap& f, const ProductView& px, const FiniteTopology& ty);
bool is_continuous(const ElementMap& f, const ProductView& px, const ProductView& py);

// Minimal neighborhoods of the final topology induced by f on its target.
std::vector<SubSet> final_min_nbhds(const ProductView& source, const ElementMap& f);

// Quotient-map check without materializing either product family: f is
// surjective and py's minimal neighborhoods coincide with the final
// topology's.
bool is_quotient_map(const ElementMap& f, const ProductView& px, const ProductView& py);

}  // namespace tsg

#endif  // TSG_TOPOLOGY_HPP
