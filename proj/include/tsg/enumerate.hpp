#ifndef TSG_ENUMERATE_HPP
#define TSG_ENUMERATE_HPP

#include <vector>

#include "tsg/ternary_table.hpp"

namespace tsg {

struct EnumerateOptions {
    bool up_to_iso = false;
    bool allow_order_4 = false;  // n=4 only behind this override
    int jobs = 1;
};

// All associative cubes of order n in lexicographic cube order, found by
// backtracking with incremental associativity pruning. With up_to_iso only
// the lex-minimal representative of each relabeling orbit is kept. The
// output is identical for every jobs value.
std::vector<TernaryTable> enumerate_ternary_semigroups(int n, const EnumerateOptions& opts = {});

}  // namespace tsg

#endif  // TSG_ENUMERATE_HPP
