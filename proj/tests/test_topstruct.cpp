#include <algorithm>
#include <vector>

#include "doctest.h"
#include "tsg/errors.hpp"
#include "tsg/group_table.hpp"
#include "tsg/topstruct.hpp"

using namespace tsg;

namespace {

SubSet from_mask(int n, unsigned mask) {
    SubSet s(n);
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.add(i);
    return s;
}

FiniteTopology sierpinski() { return topology_from_subbasis(2, {SubSet(2, {1})}); }

FiniteTopology chain3() {
    return FiniteTopology(3, {SubSet(3), SubSet(3, {2}), SubSet(3, {1, 2}), SubSet::full_set(3)});
}

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

SubSet pair_set(const Partition& p) {
    const int n = p.order();
    SubSet out(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.same_class(a, b)) out.add(a * n + b);
    return out;
}

}  // namespace

TEST_CASE("structure verdicts at construction") {
    const TopTernaryStructure strict_cyc4(cyclic_ternary(4), FiniteTopology::discrete(4),
                                          Mode::strict);
    CHECK(strict_cyc4.multiplication_continuous());
    CHECK(strict_cyc4.hausdorff());
    REQUIRE(strict_cyc4.inversion_continuous().has_value());
    CHECK(*strict_cyc4.inversion_continuous());

    const TopTernaryStructure relaxed_min3(min_table(3), chain3(), Mode::relaxed);
    CHECK(relaxed_min3.multiplication_continuous());
    CHECK(!relaxed_min3.hausdorff());
    CHECK(!relaxed_min3.inversion_continuous().has_value());

    const TopTernaryStructure sier(cyclic_ternary(2), sierpinski(), Mode::relaxed);
    CHECK(!sier.multiplication_continuous());

    const TopTernaryStructure indis(cyclic_ternary(2), FiniteTopology::indiscrete(2),
                                    Mode::relaxed);
    CHECK(indis.multiplication_continuous());
    CHECK(!indis.hausdorff());

    CHECK_THROWS_AS(TopTernaryStructure(cyclic_ternary(3), FiniteTopology::discrete(2),
                                        Mode::strict),
                    ArgumentError);
    CHECK_THROWS_AS(TopTernaryStructure(cyclic_ternary(9), FiniteTopology::discrete(9),
                                        Mode::strict),
                    ArgumentError);
}

TEST_CASE("multiplication and inversion maps") {
    const TopTernaryStructure x(cyclic_ternary(4), FiniteTopology::discrete(4), Mode::strict);
    const ElementMap mult = x.multiplication_map();
    CHECK(mult.source_order() == 64);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) CHECK(mult.apply((a * 4 + b) * 4 + c) == (a + b + c) % 4);

    REQUIRE(x.inversion_map().has_value());
    CHECK(x.inversion_map()->image_vector() == std::vector<int>{0, 3, 2, 1});

    const TopTernaryStructure y(min_table(3), FiniteTopology::discrete(3), Mode::strict);
    CHECK(!y.inversion_map().has_value());
}

TEST_CASE("top ternary semigroup and group verdicts") {
    CHECK(is_top_ternary_semigroup(
        TopTernaryStructure(cyclic_ternary(4), FiniteTopology::discrete(4), Mode::strict)));
    CHECK(is_top_ternary_semigroup(TopTernaryStructure(min_table(3), chain3(), Mode::relaxed)));
    CHECK(!is_top_ternary_semigroup(TopTernaryStructure(min_table(3), chain3(), Mode::strict)));
    CHECK(!is_top_ternary_semigroup(
        TopTernaryStructure(cyclic_ternary(2), sierpinski(), Mode::relaxed)));

    const TernaryTable hz4 = heap_from_group(GroupTable::cyclic(4));
    CHECK(is_top_ternary_group(
        TopTernaryStructure(hz4, FiniteTopology::discrete(4), Mode::strict)));
    CHECK(is_top_ternary_group(
        TopTernaryStructure(cyclic_ternary(2), FiniteTopology::indiscrete(2), Mode::relaxed)));
    CHECK(!is_top_ternary_group(
        TopTernaryStructure(cyclic_ternary(2), FiniteTopology::indiscrete(2), Mode::strict)));

    CHECK_THROWS_AS(is_top_ternary_group(
                        TopTernaryStructure(min_table(3), FiniteTopology::discrete(3),
                                            Mode::strict)),
                    ArgumentError);
}

TEST_CASE("translation maps") {
    const TernaryTable hz4 = heap_from_group(GroupTable::cyclic(4));
    const TopTernaryStructure x(hz4, FiniteTopology::discrete(4), Mode::strict);
    const TranslationMaps maps = translation_maps(x, 1, 2);
    CHECK(maps.left.image_vector() == std::vector<int>{3, 0, 1, 2});
    CHECK(maps.right.image_vector() == std::vector<int>{1, 2, 3, 0});
    CHECK(maps.lateral.image_vector() == std::vector<int>{3, 2, 1, 0});
    CHECK(maps.inversion.image_vector() == std::vector<int>{0, 1, 2, 3});

    const TopTernaryStructure c3(cyclic_ternary(3), FiniteTopology::discrete(3), Mode::strict);
    CHECK(translation_maps(c3, 0, 0).left.image_vector() == std::vector<int>{0, 1, 2});

    // Homeomorphism property for every translation pair on discrete groups.
    for (const TopTernaryStructure& g :
         {x, c3, TopTernaryStructure(group_ternary(GroupTable::symmetric(3)),
                                     FiniteTopology::discrete(6), Mode::strict)}) {
        const int n = g.table().order();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const TranslationMaps m = translation_maps(g, a, b);
                for (const ElementMap* f : {&m.left, &m.right, &m.lateral, &m.inversion}) {
                    CHECK(f->is_surjective());
                    CHECK(is_continuous(*f, g.topology(), g.topology()));
                    CHECK(is_open_map(*f, g.topology(), g.topology()));
                }
            }
    }

    CHECK_THROWS_AS(translation_maps(
                        TopTernaryStructure(min_table(3), FiniteTopology::discrete(3),
                                            Mode::strict),
                        0, 1),
                    ArgumentError);
}

TEST_CASE("translated_open") {
    const TernaryTable hz4 = heap_from_group(GroupTable::cyclic(4));
    const TopTernaryStructure x(hz4, FiniteTopology::discrete(4), Mode::strict);
    const SubSet a(4, {1}), u(4, {0, 2});

    const TranslatedOpen aau = translated_open(x, a, u, TranslationPattern::AAU);
    CHECK(aau.set == SubSet(4, {0, 2}));
    CHECK(aau.open);
    const TranslatedOpen aua = translated_open(x, a, u, TranslationPattern::AUA);
    CHECK(aua.set == SubSet(4, {0, 2}));
    CHECK(aua.open);
    const TranslatedOpen uaa = translated_open(x, a, u, TranslationPattern::UAA);
    CHECK(uaa.set == SubSet(4, {0, 2}));
    CHECK(uaa.open);

    // Not a topological ternary group, so a non-open product is recorded:
    // with abc = a - b + c the lateral pattern drags {1} to {3}.
    const FiniteTopology point4(4, {SubSet(4), SubSet(4, {1}), SubSet::full_set(4)});
    const TopTernaryStructure rough(hz4, point4, Mode::relaxed);
    CHECK(!rough.multiplication_continuous());
    const TranslatedOpen rec = translated_open(rough, SubSet(4, {0}), SubSet(4, {1}),
                                               TranslationPattern::AUA);
    CHECK(rec.set == SubSet(4, {3}));
    CHECK(!rec.open);
    const TranslatedOpen rec2 = translated_open(rough, SubSet(4, {0}), SubSet(4, {1}),
                                                TranslationPattern::AAU);
    CHECK(rec2.set == SubSet(4, {1}));
    CHECK(rec2.open);

    CHECK_THROWS_AS(translated_open(rough, a, SubSet(4, {0, 1}), TranslationPattern::AAU),
                    ArgumentError);

    // On discrete groups every translated set is open, all patterns.
    for (unsigned am = 1; am < 16; ++am)
        for (const SubSet& uu : x.topology().opens())
            for (TranslationPattern pat :
                 {TranslationPattern::AAU, TranslationPattern::AUA, TranslationPattern::UAA})
                CHECK(translated_open(x, from_mask(4, am), uu, pat).open);
}

TEST_CASE("open subgroups are closed in topological ternary groups") {
    const TernaryTable hz4 = heap_from_group(GroupTable::cyclic(4));
    const TopTernaryStructure x(hz4, FiniteTopology::discrete(4), Mode::strict);
    const OpenSubgroupReport r = open_subgroup_is_closed(x, SubSet(4, {0, 2}));
    CHECK(r.closed);
    CHECK(r.cosets == std::vector<SubSet>{SubSet(4, {0, 2}), SubSet(4, {1, 3})});
    CHECK(r.cosets_partition);
    CHECK(r.cosets_open);

    const TernaryTable hs3 = group_ternary(GroupTable::symmetric(3));
    const TopTernaryStructure y(hs3, FiniteTopology::discrete(6), Mode::strict);
    const OpenSubgroupReport ry = open_subgroup_is_closed(y, SubSet(6, {0, 3, 4}));
    CHECK(ry.closed);
    CHECK(ry.cosets == std::vector<SubSet>{SubSet(6, {0, 3, 4}), SubSet(6, {1, 2, 5})});

    // Relaxed boundary: without continuity of the multiplication an open
    // subgroup may fail to be closed; recorded, not asserted.
    const TopTernaryStructure sier(cyclic_ternary(2), sierpinski(), Mode::relaxed);
    const OpenSubgroupReport rs = open_subgroup_is_closed(sier, SubSet(2, {1}));
    CHECK(!rs.closed);
    CHECK(rs.cosets == std::vector<SubSet>{SubSet(2, {0}), SubSet(2, {1})});
    CHECK(rs.cosets_partition);
    CHECK(!rs.cosets_open);

    CHECK_THROWS_AS(open_subgroup_is_closed(x, SubSet(4, {0, 1})), ArgumentError);
    const TopTernaryStructure indis(hz4, FiniteTopology::indiscrete(4), Mode::relaxed);
    CHECK_THROWS_AS(open_subgroup_is_closed(indis, SubSet(4, {0, 2})), ArgumentError);
}

TEST_CASE("coset quotient group") {
    const TernaryTable hz4 = heap_from_group(GroupTable::cyclic(4));
    const TopTernaryStructure x(hz4, FiniteTopology::discrete(4), Mode::strict);
    const CosetQuotientResult q = coset_quotient_group(x, SubSet(4, {0, 2}));
    CHECK(q.quotient.table() == cyclic_ternary(2));
    CHECK(q.quotient.topology() == FiniteTopology::discrete(2));
    CHECK(q.pi.image_vector() == std::vector<int>{0, 1, 0, 1});
    CHECK(q.cosets == std::vector<SubSet>{SubSet(4, {0, 2}), SubSet(4, {1, 3})});
    CHECK(q.steps.pi_open);
    CHECK(q.steps.mult_continuous);
    CHECK(q.steps.inversion_continuous);
    CHECK(q.steps.relation_closed);
    CHECK(q.steps.quotient_hausdorff);
    CHECK(is_top_ternary_group(q.quotient));

    const TernaryTable hs3 = group_ternary(GroupTable::symmetric(3));
    const TopTernaryStructure y(hs3, FiniteTopology::discrete(6), Mode::strict);
    const CosetQuotientResult qy = coset_quotient_group(y, SubSet(6, {0, 3, 4}));
    CHECK(qy.quotient.table() == cyclic_ternary(2));
    CHECK(qy.steps.quotient_hausdorff);

    CHECK(coset_quotient_group(x, SubSet::full_set(4)).quotient.table().order() == 1);

    // Indiscrete relaxed: steps I and II hold, step III fails and is recorded.
    const TopTernaryStructure indis(cyclic_ternary(2), FiniteTopology::indiscrete(2),
                                    Mode::relaxed);
    const CosetQuotientResult qi = coset_quotient_group(indis, SubSet(2, {0}));
    CHECK(qi.steps.pi_open);
    CHECK(qi.steps.mult_continuous);
    CHECK(qi.steps.inversion_continuous);
    CHECK(!qi.steps.relation_closed);
    CHECK(!qi.steps.quotient_hausdorff);
    CHECK(qi.quotient.topology() == FiniteTopology::indiscrete(2));

    CHECK_THROWS_AS(coset_quotient_group(y, SubSet(6, {0, 1})), ArgumentError);  // not normal
    CHECK_THROWS_AS(coset_quotient_group(x, SubSet(4, {0, 1})), ArgumentError);  // not subgroup
}

TEST_CASE("is_closed_congruence") {
    const TopTernaryStructure disc(cyclic_ternary(6), FiniteTopology::discrete(6), Mode::strict);
    CHECK(is_closed_congruence(disc, Partition::parse(6, "0 2 4/1 3 5")));

    const TopTernaryStructure indis(cyclic_ternary(2), FiniteTopology::indiscrete(2),
                                    Mode::relaxed);
    CHECK(!is_closed_congruence(indis, Partition(2)));

    const TopTernaryStructure chain(min_table(3), chain3(), Mode::relaxed);
    CHECK(!is_closed_congruence(chain, Partition::parse(3, "0 1/2")));
    CHECK(!is_closed_congruence(chain, Partition(3)));

    const FiniteTopology split = topology_from_subbasis(3, {SubSet(3, {2}), SubSet(3, {0, 1})});
    const TopTernaryStructure sp(min_table(3), split, Mode::relaxed);
    CHECK(is_closed_congruence(sp, Partition::parse(3, "0 1/2")));

    CHECK_THROWS_AS(is_closed_congruence(chain, Partition::parse(3, "0 2/1")), ArgumentError);
}

TEST_CASE("quotient_top_semigroup") {
    const TopTernaryStructure disc(cyclic_ternary(6), FiniteTopology::discrete(6), Mode::strict);
    const QuotientTopReport r = quotient_top_semigroup(disc, Partition::parse(6, "0 2 4/1 3 5"));
    CHECK(r.pi3_quotient_map);
    CHECK(r.mult_continuous);
    CHECK(r.rho_closed);
    CHECK(r.quotient_hausdorff);
    CHECK(r.diagonal_closed);
    CHECK(r.quotient.table() == cyclic_ternary(2));
    CHECK(r.quotient.topology() == FiniteTopology::discrete(2));

    const TopTernaryStructure dmin(min_table(3), FiniteTopology::discrete(3), Mode::strict);
    const QuotientTopReport rm =
        quotient_top_semigroup(dmin, rees_congruence(min_table(3), SubSet(3, {0, 1})));
    CHECK(rm.quotient.table() == min_table(2));
    CHECK(rm.quotient_hausdorff);

    // Relaxed run where the closedness hypothesis fails: conclusions recorded.
    const TopTernaryStructure indis(cyclic_ternary(2), FiniteTopology::indiscrete(2),
                                    Mode::relaxed);
    const QuotientTopReport ri = quotient_top_semigroup(indis, Partition(2));
    CHECK(ri.pi3_quotient_map);
    CHECK(ri.mult_continuous);
    CHECK(!ri.rho_closed);
    CHECK(!ri.quotient_hausdorff);
    CHECK(!ri.diagonal_closed);

    // Discontinuous base multiplication: the multiplication conclusion is
    // recorded false without an assertion failure.
    const TopTernaryStructure sier(cyclic_ternary(2), sierpinski(), Mode::relaxed);
    const QuotientTopReport rs = quotient_top_semigroup(sier, Partition(2));
    CHECK(rs.pi3_quotient_map);
    CHECK(!rs.mult_continuous);

    CHECK_THROWS_AS(quotient_top_semigroup(dmin, Partition::parse(3, "0 2/1")), ArgumentError);
}

TEST_CASE("the congruence is the pair preimage of the quotient diagonal") {
    for (int n = 2; n <= 4; ++n)
        for (const Partition& p : all_partitions(n)) {
            const ElementMap pi = p.natural_map();
            const int m = p.num_classes();
            SubSet diag(m * m);
            for (int j = 0; j < m; ++j) diag.add(j * m + j);
            CHECK(ElementMap::pair_power(pi).preimage_of(diag) == pair_set(p));
        }
}

TEST_CASE("saturations of subsets under closed relations are closed") {
    // Finite form of the compact-saturation lemma: every subset works.
    int closed_relations = 0;
    for (int n = 2; n <= 3; ++n)
        for (const FiniteTopology& t : all_topologies(n)) {
            const FiniteTopology prod = product_topology(t, t);
            for (const Partition& p : all_partitions(n)) {
                if (!prod.is_closed(pair_set(p))) continue;
                ++closed_relations;
                const ElementMap pi = p.natural_map();
                for (unsigned mask = 0; mask < (1u << n); ++mask)
                    CHECK(t.is_closed(saturate(pi, from_mask(n, mask))));
            }
        }
    CHECK(closed_relations > 0);
}

TEST_CASE("closed relations push closedness and separation to the quotient") {
    // Discrete carriers: the compact Hausdorff case of the projection lemma.
    for (int n = 2; n <= 3; ++n) {
        const FiniteTopology t = FiniteTopology::discrete(n);
        for (const Partition& p : all_partitions(n)) {
            const ElementMap pi = p.natural_map();
            const FiniteTopology tq = quotient_topology(t, pi);
            CHECK(is_closed_map(pi, t, tq));
            CHECK(is_hausdorff(tq));
        }
    }

    // Relaxed sweep: a closed relation suffices on finite carriers.
    int cases = 0;
    for (const FiniteTopology& t : all_topologies(3)) {
        const FiniteTopology prod = product_topology(t, t);
        for (const Partition& p : all_partitions(3)) {
            if (!prod.is_closed(pair_set(p))) continue;
            ++cases;
            const ElementMap pi = p.natural_map();
            const FiniteTopology tq = quotient_topology(t, pi);
            CHECK(is_closed_map(pi, t, tq));
            CHECK(is_hausdorff(tq));
            for (const SubSet& v : t.opens()) {
                const SubSet si = saturated_interior(pi, v);
                CHECK(t.is_open(si));
                CHECK(saturate(pi, si) == si);
                CHECK(si.is_subset_of(v));
            }
        }
    }
    CHECK(cases > 0);
}

TEST_CASE("regular weak-sum hypotheses do not force a Hausdorff Rees quotient") {
    // Counterexample keeping the forward theorem honest: all three finite
    // hypothesis reductions hold, yet the Rees quotient is not Hausdorff.
    // The missing ingredient is the standing Hausdorffness of the ambient
    // space, which no non-discrete finite instance can supply.
    const TernaryTable m4 = min_table(4);
    const FiniteTopology halves(4, {SubSet(4), SubSet(4, {0, 1}), SubSet(4, {2, 3}),
                                    SubSet::full_set(4)});
    const SubSet ideal(4, {0, 1});

    CHECK(is_regular_ideal(m4, halves, ideal));
    CHECK(is_weak_topology_sum(halves, {SubSet(4, {0, 1}), SubSet(4, {2, 3})}));

    const Partition rho = rees_congruence(m4, ideal);
    const FiniteTopology tq = quotient_topology(halves, rho.natural_map());
    CHECK(tq.opens() == std::vector<SubSet>{SubSet(3), SubSet(3, {0}), SubSet(3, {1, 2}),
                                            SubSet::full_set(3)});
    CHECK(!is_hausdorff(tq));
}
