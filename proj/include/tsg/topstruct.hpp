#ifndef TSG_TOPSTRUCT_HPP
#define TSG_TOPSTRUCT_HPP

#include <optional>
#include <vector>

#include "tsg/congruence.hpp"
#include "tsg/element_map.hpp"
#include "tsg/partition.hpp"
#include "tsg/ternary_table.hpp"
#include "tsg/topology.hpp"

namespace tsg {

// Whether the Hausdorff clause of the topological ternary semigroup
// definition is enforced. Finite Hausdorff spaces are discrete, so relaxed
// mode is the only way to exercise non-trivial topologies.
enum class Mode { strict, relaxed };

// Ternary table plus topology on the same carrier, with the continuity and
// separation verdicts computed once at construction. Carrier order is capped
// at 8 so the triple product stays within 512 points.
class TopTernaryStructure {
  public:
    TopTernaryStructure(TernaryTable table, FiniteTopology topology, Mode mode);

    const TernaryTable& table() const { return table_; }
    const FiniteTopology& topology() const { return topology_; }
    Mode mode() const { return mode_; }

    bool multiplication_continuous() const { return mult_continuous_; }
    bool hausdorff() const { return hausdorff_; }
    // Engaged only when the table is a ternary group whose every element has
    // an inverse.
    const std::optional<bool>& inversion_continuous() const { return inversion_continuous_; }

    // (a,b,c) -> abc on the triple product carrier.
    ElementMap multiplication_map() const;
    // x -> x^-1; absent when some element has no inverse.
    std::optional<ElementMap> inversion_map() const;

  private:
    TernaryTable table_;
    FiniteTopology topology_;
    Mode mode_;
    bool mult_continuous_;
    bool hausdorff_;
    std::optional<bool> inversion_continuous_;
};

// Multiplication continuous, and Hausdorff unless mode is relaxed.
bool is_top_ternary_semigroup(const TopTernaryStructure& x);

// is_top_ternary_semigroup plus continuous inversion. Requires a ternary
// group table; missing inverses are a state error naming the element.
bool is_top_ternary_group(const TopTernaryStructure& x);

struct TranslationMaps {
    ElementMap left;       // x -> abx
    ElementMap right;      // x -> xab
    ElementMap lateral;    // x -> axb
    ElementMap inversion;  // x -> x^-1
};

// The four maps of Theorem 3.22; each is verified bijective, continuous and
// open whenever x passes is_top_ternary_group.
TranslationMaps translation_maps(const TopTernaryStructure& x, Elem a, Elem b);

enum class TranslationPattern { AAU, AUA, UAA };

struct TranslatedOpen {
    SubSet set;
    bool open;
};

// Set product in the given pattern plus its openness verdict; the verdict is
// asserted true when x passes is_top_ternary_group (Corollary 3.23).
TranslatedOpen translated_open(const TopTernaryStructure& x, const SubSet& a, const SubSet& u,
                               TranslationPattern pattern);

struct OpenSubgroupReport {
    bool closed;
    std::vector<SubSet> cosets;  // distinct aHH in first-occurrence order
    bool cosets_partition;
    bool cosets_open;
};

// Theorem 3.24: an open ternary subgroup is closed. The coset partition is
// always asserted; openness of the cosets and closedness of H are asserted
// when x passes is_top_ternary_group, otherwise recorded.
OpenSubgroupReport open_subgroup_is_closed(const TopTernaryStructure& x, const SubSet& h);

struct CosetStepReport {
    bool pi_open;                // Step I
    bool mult_continuous;        // Step I
    bool inversion_continuous;   // Step II
    bool relation_closed;        // Step III
    bool quotient_hausdorff;     // Step III
};

struct CosetQuotientResult {
    TopTernaryStructure quotient;
    ElementMap pi;
    std::vector<SubSet> cosets;
    CosetStepReport steps;
};

// S/H for a normal ternary subgroup H: carrier = distinct cosets xHH with
// (xHH, yHH, zHH) -> (xyz)HH, the quotient topology, and inversion via
// representatives (representative-independence verified exhaustively). Steps
// are asserted when x passes is_top_ternary_group in strict mode.
CosetQuotientResult coset_quotient_group(const TopTernaryStructure& x, const SubSet& h);

// The pair set of p is closed in the product topology on S x S.
bool is_closed_congruence(const TopTernaryStructure& x, const Partition& p);

struct QuotientTopReport {
    TopTernaryStructure quotient;
    ElementMap pi;
    bool pi3_quotient_map;    // hypothesis
    bool mult_continuous;     // conclusion, asserted when hypotheses hold
    bool rho_closed;
    bool quotient_hausdorff;  // asserted when rho closed and hypotheses hold
    bool diagonal_closed;     // recorded separately from hausdorff
};

// Theorem 3.5 replay: quotient table + quotient topology + the hypothesis
// and conclusion bits. Conclusions are asserted only when the multiplication
// of x is continuous and pi x pi x pi is a quotient map.
QuotientTopReport quotient_top_semigroup(const TopTernaryStructure& x, const Partition& p);

}  // namespace tsg

#endif  // TSG_TOPSTRUCT_HPP
