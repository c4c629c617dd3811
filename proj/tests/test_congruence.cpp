#include <algorithm>
#include <utility>
#include <vector>

#include "doctest.h"
#include "tsg/congruence.hpp"
#include "tsg/errors.hpp"
#include "tsg/group_table.hpp"

using namespace tsg;

namespace {

// All set partitions of {0..n-1} via restricted growth strings.
std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> rgs(n, 0);
    auto rec = [&](auto&& self, int i, int maxid) -> void {
        if (i == n) {
            out.push_back(Partition::from_class_ids(rgs));
            return;
        }
        for (int v = 0; v <= maxid + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(maxid, v));
        }
    };
    rec(rec, 1, 0);
    return out;
}

// Independent congruence oracle: the sextuple criterion over related pairs.
bool congruence_oracle(const TernaryTable& t, const Partition& p) {
    const int n = t.order();
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.same_class(a, b)) rel.emplace_back(a, b);
    for (const auto& [a, b] : rel)
        for (const auto& [c, d] : rel)
            for (const auto& [e, f] : rel)
                if (!p.same_class(t.at(a, c, e), t.at(b, d, f))) return false;
    return true;
}

std::vector<Partition> congruences_oracle(const TernaryTable& t) {
    std::vector<Partition> out;
    for (const Partition& p : all_partitions(t.order()))
        if (congruence_oracle(t, p)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

// Naive closure: saturate under symmetry, transitivity and the three
// substitution rules until nothing changes.
Partition closure_oracle(const TernaryTable& t, const std::vector<std::pair<int, int>>& pairs) {
    const int n = t.order();
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) rel[i][i] = 1;
    for (const auto& [a, b] : pairs) rel[a][b] = rel[b][a] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!rel[a][b]) continue;
                for (int c = 0; c < n; ++c)
                    if (rel[b][c] && !rel[a][c]) rel[a][c] = rel[c][a] = changed = true;
                for (int s = 0; s < n; ++s)
                    for (int u = 0; u < n; ++u) {
                        const std::pair<int, int> im[3] = {
                            {t.at(s, u, a), t.at(s, u, b)},
                            {t.at(s, a, u), t.at(s, b, u)},
                            {t.at(a, s, u), t.at(b, s, u)}};
                        for (const auto& [x, y] : im)
                            if (!rel[x][y]) rel[x][y] = rel[y][x] = changed = true;
                    }
            }
    }
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rel[a][b]) all.emplace_back(a, b);
    return Partition::from_pairs(n, all);
}

}  // namespace

TEST_CASE("partition basics") {
    Partition p = Partition::parse(6, "0 2 4/1 3 5");
    CHECK(p.to_string() == "0 2 4/1 3 5");
    CHECK(Partition::parse(6, "5 3 1/4 0 2").to_string() == "0 2 4/1 3 5");
    CHECK(p.num_classes() == 2);
    CHECK(p.class_id(3) == 1);
    CHECK(p.same_class(0, 4));
    CHECK(!p.same_class(0, 1));
    CHECK(p.class_members(0) == SubSet(6, {0, 2, 4}));
    CHECK(p.representative(1) == 1);
    CHECK(p.natural_map().image_vector() == std::vector<int>{0, 1, 0, 1, 0, 1});

    CHECK(Partition(4).num_classes() == 4);
    CHECK(Partition::all_in_one(4).num_classes() == 1);
    CHECK(Partition::from_pairs(6, {{0, 2}, {2, 4}}).to_string() == "0 2 4/1/3/5");
    CHECK(Partition::from_classes(3, {{2}, {0, 1}}).to_string() == "0 1/2");

    CHECK(Partition(6).refines(p));
    CHECK(p.refines(Partition::all_in_one(6)));
    CHECK(!p.refines(Partition::parse(6, "0 3/1 4/2 5")));

    CHECK_THROWS_AS(Partition::parse(3, "0 1/1 2"), ArgumentError);
    CHECK_THROWS_AS(Partition::parse(3, "0/1"), ArgumentError);
    CHECK_THROWS_AS(Partition::parse(3, "0 x/1 2"), ArgumentError);
    CHECK_THROWS_AS(Partition::parse(3, "0 5/1 2"), ArgumentError);
}

TEST_CASE("is_congruence") {
    TernaryTable cyc6 = cyclic_ternary(6);
    const Partition mod2 = Partition::parse(6, "0 2 4/1 3 5");
    CHECK(is_congruence(cyc6, mod2).ok);
    CHECK(is_congruence(cyc6, Partition(6)).ok);
    CHECK(is_congruence(cyc6, Partition::all_in_one(6)).ok);

    const CongruenceResult bad = is_congruence(min_table(3), Partition::parse(3, "0 2/1"));
    CHECK(!bad.ok);
    CHECK(bad.witness == std::array<Elem, 6>{0, 2, 0, 2, 1, 1});

    // Verdict agrees with the sextuple oracle across every partition.
    for (const TernaryTable& t : {cyc6, min_table(4), product_table(4)})
        for (const Partition& p : all_partitions(t.order()))
            CHECK(is_congruence(t, p).ok == congruence_oracle(t, p));

    CHECK_THROWS_AS(is_congruence(cyc6, Partition(5)), ArgumentError);
}

TEST_CASE("congruence_closure") {
    TernaryTable cyc6 = cyclic_ternary(6);
    CHECK(congruence_closure(cyc6, {{0, 2}}).to_string() == "0 2 4/1 3 5");
    CHECK(congruence_closure(cyc6, {}) == Partition(6));
    CHECK(congruence_closure(cyc6, {{0, 1}}) == Partition::all_in_one(6));

    for (const auto& [t, pairs] :
         std::vector<std::pair<TernaryTable, std::vector<std::pair<int, int>>>>{
             {cyc6, {{0, 3}}},
             {min_table(4), {{1, 2}}},
             {product_table(4), {{0, 1}}},
             {heap_from_group(GroupTable::cyclic(4)), {{0, 2}}}}) {
        const Partition got = congruence_closure(t, pairs);
        CHECK(got == closure_oracle(t, pairs));
        CHECK(is_congruence(t, got).ok);
        for (const auto& [a, b] : pairs) CHECK(got.same_class(a, b));
        // Minimality: refines every congruence containing the pairs.
        for (const Partition& q : enumerate_congruences(t)) {
            bool holds = true;
            for (const auto& [a, b] : pairs) holds = holds && q.same_class(a, b);
            if (holds) CHECK(got.refines(q));
        }
    }

    CHECK_THROWS_AS(congruence_closure(cyc6, {{0, 6}}), ArgumentError);
}

TEST_CASE("rees_congruence") {
    CHECK(rees_congruence(min_table(3), SubSet(3, {0, 1})) == Partition::parse(3, "0 1/2"));
    CHECK(rees_congruence(min_table(3), SubSet(3, {0})) == Partition(3));
    CHECK(rees_congruence(product_table(4), SubSet(4, {0, 2})) == Partition::parse(4, "0 2/1/3"));
    CHECK_THROWS_AS(rees_congruence(min_table(3), SubSet(3, {1})), ArgumentError);
    CHECK_THROWS_AS(rees_congruence(cyclic_ternary(4), SubSet(4, {0})), ArgumentError);
}

TEST_CASE("quotient_semigroup") {
    TernaryTable cyc6 = cyclic_ternary(6);
    const QuotientResult q = quotient_semigroup(cyc6, Partition::parse(6, "0 2 4/1 3 5"));
    CHECK(q.table == cyclic_ternary(2));
    CHECK(q.natural_map.image_vector() == std::vector<int>{0, 1, 0, 1, 0, 1});
    CHECK(q.representatives == std::vector<Elem>{0, 1});

    CHECK(quotient_semigroup(cyc6, Partition(6)).table == cyc6);
    CHECK(quotient_semigroup(min_table(3), rees_congruence(min_table(3), SubSet(3, {0, 1}))).table ==
          min_table(2));

    // The absorbing class: every product touching class 0 stays in class 0.
    const QuotientResult r =
        quotient_semigroup(product_table(4), rees_congruence(product_table(4), SubSet(4, {0, 2})));
    for (int a = 0; a < r.table.order(); ++a)
        for (int b = 0; b < r.table.order(); ++b) {
            CHECK(r.table.at(a, b, 0) == 0);
            CHECK(r.table.at(a, 0, b) == 0);
            CHECK(r.table.at(0, a, b) == 0);
        }

    CHECK_THROWS_AS(quotient_semigroup(min_table(3), Partition::parse(3, "0 2/1")), ArgumentError);
}

TEST_CASE("verify_diagram") {
    TernaryTable cyc6 = cyclic_ternary(6);
    CHECK(verify_diagram(cyc6, Partition::parse(6, "0 2 4/1 3 5")));
    CHECK(verify_diagram(min_table(3), rees_congruence(min_table(3), SubSet(3, {0, 1}))));
    CHECK(verify_diagram(product_table(4), Partition(4)));
}

TEST_CASE("enumerate_congruences matches the Bell filter") {
    CHECK(enumerate_congruences(cyclic_ternary(1)).size() == 1);

    TernaryTable cyc6 = cyclic_ternary(6);
    const std::vector<Partition> got6 = enumerate_congruences(cyc6);
    CHECK(got6 == congruences_oracle(cyc6));
    CHECK(all_partitions(6).size() == 203);  // Bell(6)

    for (const TernaryTable& t :
         {product_table(2), min_table(4), heap_from_group(GroupTable::cyclic(4))}) {
        CHECK(enumerate_congruences(t) == congruences_oracle(t));
    }
}

TEST_CASE("enumerate_congruences lattice walk agrees above the partition cutoff") {
    // n = 8 takes the principal-congruence join-lattice path; the oracle
    // still filters all Bell(8) = 4140 partitions directly.
    TernaryTable cyc8 = cyclic_ternary(8);
    const std::vector<Partition> got = enumerate_congruences(cyc8);
    CHECK(all_partitions(8).size() == 4140);
    CHECK(got == congruences_oracle(cyc8));
    CHECK(got.size() == 4);  // cosets of the four subgroups of Z8

    CHECK_THROWS_AS(enumerate_congruences(cyclic_ternary(11)), ArgumentError);
}
