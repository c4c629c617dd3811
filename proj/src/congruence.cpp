#include "tsg/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace tsg {

CongruenceResult is_congruence(const TernaryTable& t, const Partition& p) {
    require_associative(t);
    const int n = t.order();
    if (p.order() != n) throw ArgumentError("is_congruence: partition order mismatch");
    const auto& cls = p.class_ids();
    for (int a = 0; a < n; ++a)
        for (int b : p.class_members(cls[a]).elements())
            for (int c = 0; c < n; ++c)
                for (int d : p.class_members(cls[c]).elements())
                    for (int e = 0; e < n; ++e)
                        for (int f : p.class_members(cls[e]).elements())
                            if (cls[t.at(a, c, e)] != cls[t.at(b, d, f)])
                                return {false, {a, b, c, d, e, f}};
    return {true, {}};
}

Partition congruence_closure(const TernaryTable& t,
                             const std::vector<std::pair<int, int>>& pairs) {
    require_associative(t);
    const int n = t.order();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::deque<std::pair<int, int>> work;
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        parent[std::max(a, b)] = std::min(a, b);
        work.emplace_back(a, b);
    };
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ArgumentError("congruence_closure: pair element out of range");
        unite(a, b);
    }
    while (!work.empty()) {
        auto [a, b] = work.front();
        work.pop_front();
        for (int s = 0; s < n; ++s)
            for (int u = 0; u < n; ++u) {
                unite(t.at(s, u, a), t.at(s, u, b));
                unite(t.at(a, s, u), t.at(b, s, u));
                unite(t.at(s, a, u), t.at(s, b, u));
            }
    }
    std::vector<int> ids(n);
    for (int x = 0; x < n; ++x) ids[x] = find(x);
    return Partition::from_class_ids(std::move(ids));
}

Partition rees_congruence(const TernaryTable& t, const SubSet& ideal) {
    require_associative(t);
    if (!is_ideal(t, ideal)) throw ArgumentError("rees_congruence: set is not an ideal");
    const int n = t.order();
    Partition p(n);
    auto members = ideal.elements();
    if (members.size() < 2) return p;
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 1; i < members.size(); ++i) pairs.emplace_back(members[0], members[i]);
    return Partition::from_pairs(n, pairs);
}

QuotientResult quotient_semigroup(const TernaryTable& t, const Partition& p) {
    if (auto r = is_congruence(t, p); !r.ok)
        throw ArgumentError("quotient_semigroup: partition is not a congruence");
    const int n = t.order();
    const int m = p.num_classes();
    std::vector<Elem> reps(m);
    for (int k = 0; k < m; ++k) reps[k] = p.representative(k);
    const auto& cls = p.class_ids();
    TernaryTable q = TernaryTable::from_function(
        m, [&](int ka, int kb, int kc) { return cls[t.at(reps[ka], reps[kb], reps[kc])]; });
    if (n <= 8) {
        for (int ka = 0; ka < m; ++ka)
            for (int kb = 0; kb < m; ++kb)
                for (int kc = 0; kc < m; ++kc)
                    for (int a : p.class_members(ka).elements())
                        for (int b : p.class_members(kb).elements())
                            for (int c : p.class_members(kc).elements())
                                if (cls[t.at(a, b, c)] != q.at(ka, kb, kc))
                                    throw StructuralError(
                                        "quotient_semigroup: product not well defined");
    }
    if (!q.verify_associativity())
        throw StructuralError("quotient_semigroup: quotient table not associative");
    return {std::move(q), p.natural_map(), std::move(reps)};
}

bool verify_diagram(const TernaryTable& t, const Partition& p) {
    QuotientResult q = quotient_semigroup(t, p);
    const int n = t.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (q.natural_map.apply(t.at(a, b, c)) !=
                    q.table.at(q.natural_map.apply(a), q.natural_map.apply(b),
                               q.natural_map.apply(c)))
                    return false;
    return true;
}

namespace {

void walk_rgs(const TernaryTable& t, std::vector<int>& ids, int pos, int next_free,
              std::vector<Partition>& out) {
    const int n = t.order();
    if (pos == n) {
        Partition p = Partition::from_class_ids(ids);
        if (is_congruence(t, p).ok) out.push_back(std::move(p));
        return;
    }
    for (int id = 0; id <= next_free; ++id) {
        ids[pos] = id;
        walk_rgs(t, ids, pos + 1, std::max(next_free, id + 1), out);
    }
}

}  // namespace

std::vector<Partition> enumerate_congruences(const TernaryTable& t) {
    require_associative(t);
    const int n = t.order();
    if (n > 10) throw ArgumentError("enumerate_congruences: order above 10");
    if (n <= 7) {
        std::vector<Partition> out;
        std::vector<int> ids(n, 0);
        walk_rgs(t, ids, 1, 1, out);
        return out;
    }
    // Join lattice over principal congruences, seeded at the diagonal.
    std::vector<Partition> principals;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) principals.push_back(congruence_closure(t, {{a, b}}));
    auto pairs_of = [](const Partition& p) {
        std::vector<std::pair<int, int>> out;
        for (int k = 0; k < p.num_classes(); ++k) {
            auto members = p.class_members(k).elements();
            for (size_t i = 1; i < members.size(); ++i)
                out.emplace_back(members[0], members[i]);
        }
        return out;
    };
    std::set<Partition> seen{Partition::diagonal(n)};
    std::deque<Partition> work(seen.begin(), seen.end());
    while (!work.empty()) {
        Partition cur = std::move(work.front());
        work.pop_front();
        for (const Partition& principal : principals) {
            auto joined_pairs = pairs_of(cur);
            auto extra = pairs_of(principal);
            joined_pairs.insert(joined_pairs.end(), extra.begin(), extra.end());
            Partition join = congruence_closure(t, joined_pairs);
            if (seen.insert(join).second) work.push_back(join);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace tsg
