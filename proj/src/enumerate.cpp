#include "tsg/enumerate.hpp"

#include <algorithm>

#include "tsg/errors.hpp"
#include "tsg/parallel.hpp"

namespace tsg {

namespace {

struct Searcher {
    int n;
    std::vector<int> cube;  // -1 = unassigned

    explicit Searcher(int order) : n(order), cube(size_t(order) * order * order, -1) {}

    int look(int a, int b, int c) const { return cube[(size_t(a) * n + b) * n + c]; }

    // Compare every pair of groupings of (a,b,c,d,e) that is already fully
    // determined by assigned cells.
    bool quintuple_ok(int a, int b, int c, int d, int e) const {
        int v1 = -1, v2 = -1, v3 = -1;
        if (int i1 = look(a, b, c); i1 >= 0) v1 = look(i1, d, e);
        if (int i2 = look(b, c, d); i2 >= 0) v2 = look(a, i2, e);
        if (int i3 = look(c, d, e); i3 >= 0) v3 = look(a, b, i3);
        if (v1 >= 0 && v2 >= 0 && v1 != v2) return false;
        if (v1 >= 0 && v3 >= 0 && v1 != v3) return false;
        if (v2 >= 0 && v3 >= 0 && v2 != v3) return false;
        return true;
    }

    // Check only the quintuples in which the newly assigned cell (x,y,z) can
    // appear as a lookup: three inner roles, three outer roles.
    bool consistent_after(int idx) const {
        const int x = idx / (n * n), y = (idx / n) % n, z = idx % n;
        for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e)
                if (!quintuple_ok(x, y, z, d, e)) return false;
        for (int a = 0; a < n; ++a)
            for (int e = 0; e < n; ++e)
                if (!quintuple_ok(a, x, y, z, e)) return false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!quintuple_ok(a, b, x, y, z)) return false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    const int v = look(a, b, c);
                    if (v == x && !quintuple_ok(a, b, c, y, z)) return false;
                    if (v == y && !quintuple_ok(x, a, b, c, z)) return false;
                    if (v == z && !quintuple_ok(x, y, a, b, c)) return false;
                }
        return true;
    }

    template <typename Sink>
    void dfs(size_t pos, Sink&& sink) {
        if (pos == cube.size()) {
            sink(cube);
            return;
        }
        for (int v = 0; v < n; ++v) {
            cube[pos] = v;
            if (consistent_after(int(pos))) dfs(pos + 1, sink);
        }
        cube[pos] = -1;
    }
};

}  // namespace

std::vector<TernaryTable> enumerate_ternary_semigroups(int n, const EnumerateOptions& opts) {
    if (n < 1) throw ArgumentError("enumerate_ternary_semigroups: order must be positive");
    if (n > 4) throw ArgumentError("enumerate_ternary_semigroups: order above 4 not supported");
    if (n == 4 && !opts.allow_order_4)
        throw ArgumentError("enumerate_ternary_semigroups: order 4 requires the override flag");

    const size_t cube_size = size_t(n) * n * n;
    const size_t split_depth = std::min<size_t>(cube_size, 3);

    // Collect valid prefixes first, then finish each subtree independently.
    // Concatenating subtree outputs in prefix order reproduces the plain
    // depth-first order for every worker count.
    std::vector<std::vector<int>> prefixes;
    {
        Searcher s(n);
        auto grow = [&](auto&& self, size_t pos) -> void {
            if (pos == split_depth) {
                prefixes.push_back(s.cube);
                return;
            }
            for (int v = 0; v < n; ++v) {
                s.cube[pos] = v;
                if (s.consistent_after(int(pos))) self(self, pos + 1);
            }
            s.cube[pos] = -1;
        };
        grow(grow, 0);
    }

    auto finish = [&](int i) {
        Searcher s(n);
        s.cube = prefixes[i];
        std::vector<TernaryTable> found;
        s.dfs(split_depth, [&](const std::vector<int>& full) {
            TernaryTable t(n, std::vector<Elem>(full.begin(), full.end()));
            if (opts.up_to_iso && !is_canonical(t)) return;
            if (!t.verify_associativity())
                throw StructuralError("enumerate_ternary_semigroups: pruning accepted a bad cube");
            found.push_back(std::move(t));
        });
        return found;
    };
    auto buckets = parallel_map(int(prefixes.size()), opts.jobs, finish);

    std::vector<TernaryTable> out;
    for (auto& bucket : buckets)
        for (auto& t : bucket) out.push_back(std::move(t));
    return out;
}

}  // namespace tsg
