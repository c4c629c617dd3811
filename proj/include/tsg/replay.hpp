#ifndef TSG_REPLAY_HPP
#define TSG_REPLAY_HPP

#include <string>
#include <utility>
#include <vector>

#include "tsg/topstruct.hpp"

namespace tsg {

struct ReplayRecord {
    std::string suite;
    std::string instance_id;
    std::string hypotheses;  // fixed-order bitstring, see suite docs
    std::string conclusion;  // pass | fail | skip
};

struct ReplayReport {
    std::string suite;
    Mode mode = Mode::strict;
    std::vector<ReplayRecord> records;                   // ordered by instance id
    std::vector<std::pair<std::string, int>> findings;   // relaxed-mode tallies
    int violations = 0;

    // One line per record: "<suite> <id> <bits> <conclusion>", then findings
    // ("finding <key> count=<n>", relaxed mode only), then "violations <n>".
    std::string to_text() const;
};

struct ReplayOptions {
    Mode mode = Mode::strict;
    int max_order = 0;  // 0 = suite default
    int jobs = 1;
};

// Suites:
//   wallace     quotients by congruences are topological ternary semigroups
//               (hypothesis bits HMCQ: base Hausdorff, multiplication
//               continuous, congruence closed, pi^3 a quotient map)
//   rees        same conclusion for Rees congruences of ideals (bits HMCQ)
//   coset       coset quotients by normal subgroups are topological ternary
//               groups (bits HMV: Hausdorff, multiplication continuous,
//               inversion continuous)
//   th2-forward regular closed ideal with a weak-sum decomposition witness
//               gives a Hausdorff Rees quotient (bits RWK: regular ideal,
//               weak sum, K' part conditions)
ReplayReport replay_suite(const std::string& suite, const ReplayOptions& opts = {});

}  // namespace tsg

#endif  // TSG_REPLAY_HPP
