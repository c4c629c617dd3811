#include "tsg/topstruct.hpp"

#include <string>

namespace tsg {

namespace {

ElementMap make_mul_map(const TernaryTable& t) {
    const int n = t.order();
    std::vector<int> image(size_t(n) * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) image[(size_t(a) * n + b) * n + c] = t.at(a, b, c);
    return ElementMap(n * n * n, n, std::move(image));
}

std::optional<ElementMap> make_inversion_map(const TernaryTable& t) {
    const int n = t.order();
    std::vector<int> image(n);
    for (int a = 0; a < n; ++a) {
        auto inv = inverse_of(t, a);
        if (!inv) return std::nullopt;
        image[a] = *inv;
    }
    return ElementMap(n, n, std::move(image));
}

// Pair set {(a,b) : same class} as a subset of the pair carrier.
SubSet relation_pairs(const Partition& p) {
    const int n = p.order();
    SubSet pairs(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.same_class(a, b)) pairs.add(a * n + b);
    return pairs;
}

void require_group(const TopTernaryStructure& x, const char* who) {
    if (!is_ternary_group(x.table()))
        throw ArgumentError(std::string(who) + ": table is not a ternary group");
    const int n = x.table().order();
    for (int a = 0; a < n; ++a)
        if (!inverse_of(x.table(), a))
            throw StateError(std::string(who) + ": element " + std::to_string(a) +
                             " has no inverse");
}

}  // namespace

TopTernaryStructure::TopTernaryStructure(TernaryTable table, FiniteTopology topology, Mode mode)
    : table_(std::move(table)), topology_(std::move(topology)), mode_(mode) {
    if (table_.order() != topology_.order())
        throw ArgumentError("TopTernaryStructure: table and topology orders differ");
    if (size_t(table_.order()) * table_.order() * table_.order() > 512)
        throw ArgumentError("TopTernaryStructure: triple product above 512 points");
    require_associative(table_);
    mult_continuous_ = is_continuous(multiplication_map(),
                                     ProductView(topology_, topology_, topology_), topology_);
    hausdorff_ = is_hausdorff(topology_);
    if (is_ternary_group(table_)) {
        if (auto inv = make_inversion_map(table_))
            inversion_continuous_ = is_continuous(*inv, topology_, topology_);
    }
}

ElementMap TopTernaryStructure::multiplication_map() const { return make_mul_map(table_); }

std::optional<ElementMap> TopTernaryStructure::inversion_map() const {
    return make_inversion_map(table_);
}

bool is_top_ternary_semigroup(const TopTernaryStructure& x) {
    return x.multiplication_continuous() && (x.mode() == Mode::relaxed || x.hausdorff());
}

bool is_top_ternary_group(const TopTernaryStructure& x) {
    require_group(x, "is_top_ternary_group");
    return is_top_ternary_semigroup(x) && x.inversion_continuous() &&
           *x.inversion_continuous();
}

TranslationMaps translation_maps(const TopTernaryStructure& x, Elem a, Elem b) {
    require_group(x, "translation_maps");
    const TernaryTable& t = x.table();
    const int n = t.order();
    std::vector<int> l(n), r(n), m(n);
    for (int v = 0; v < n; ++v) {
        l[v] = t.at(a, b, v);
        r[v] = t.at(v, a, b);
        m[v] = t.at(a, v, b);
    }
    TranslationMaps maps{ElementMap(n, n, std::move(l)), ElementMap(n, n, std::move(r)),
                         ElementMap(n, n, std::move(m)), *x.inversion_map()};
    if (is_top_ternary_group(x)) {
        for (const ElementMap* f : {&maps.left, &maps.right, &maps.lateral, &maps.inversion}) {
            const bool bijective = f->is_surjective();
            if (!bijective || !is_continuous(*f, x.topology(), x.topology()) ||
                !is_open_map(*f, x.topology(), x.topology()))
                throw StructuralError("translation_maps: map is not a homeomorphism");
        }
    }
    return maps;
}

TranslatedOpen translated_open(const TopTernaryStructure& x, const SubSet& a, const SubSet& u,
                               TranslationPattern pattern) {
    if (!x.topology().is_open(u)) throw ArgumentError("translated_open: set U is not open");
    SubSet product(x.table().order());
    switch (pattern) {
        case TranslationPattern::AAU: product = set_product(x.table(), a, a, u); break;
        case TranslationPattern::AUA: product = set_product(x.table(), a, u, a); break;
        case TranslationPattern::UAA: product = set_product(x.table(), u, a, a); break;
    }
    TranslatedOpen result{product, x.topology().is_open(product)};
    // inversion_continuous is engaged only for group tables with all
    // inverses, so is_top_ternary_group cannot throw past this gate.
    if (!result.open && x.inversion_continuous().has_value() && is_top_ternary_group(x))
        throw StructuralError("translated_open: product of opens not open in a group");
    return result;
}

OpenSubgroupReport open_subgroup_is_closed(const TopTernaryStructure& x, const SubSet& h) {
    require_group(x, "open_subgroup_is_closed");
    if (!is_ternary_subgroup(x.table(), h))
        throw ArgumentError("open_subgroup_is_closed: not a ternary subgroup");
    if (!x.topology().is_open(h)) throw ArgumentError("open_subgroup_is_closed: H is not open");
    const int n = x.table().order();
    OpenSubgroupReport report;
    std::vector<int> coset_of(n, -1);
    for (int a = 0; a < n; ++a) {
        SubSet coset = left_coset(x.table(), h, a);
        bool fresh = true;
        for (size_t k = 0; k < report.cosets.size() && fresh; ++k)
            if (report.cosets[k] == coset) {
                coset_of[a] = int(k);
                fresh = false;
            }
        if (fresh) {
            coset_of[a] = int(report.cosets.size());
            report.cosets.push_back(std::move(coset));
        }
    }
    // aHH cosets partition the carrier for any ternary subgroup of a ternary
    // group; a failure would contradict the algebra, not the topology.
    SubSet covered(n);
    report.cosets_partition = true;
    for (const SubSet& coset : report.cosets) {
        if (covered.intersects(coset)) report.cosets_partition = false;
        covered |= coset;
    }
    for (int a = 0; a < n; ++a)
        if (!report.cosets[coset_of[a]].contains(a)) report.cosets_partition = false;
    if (covered != SubSet::full_set(n)) report.cosets_partition = false;
    if (!report.cosets_partition)
        throw StructuralError("open_subgroup_is_closed: cosets fail to partition the carrier");
    report.cosets_open = true;
    for (const SubSet& coset : report.cosets)
        if (!x.topology().is_open(coset)) report.cosets_open = false;
    report.closed = x.topology().is_closed(h);
    if (is_top_ternary_group(x) && (!report.cosets_open || !report.closed))
        throw StructuralError("open_subgroup_is_closed: open subgroup is not closed");
    return report;
}

bool is_closed_congruence(const TopTernaryStructure& x, const Partition& p) {
    if (p.order() != x.table().order())
        throw ArgumentError("is_closed_congruence: partition order mismatch");
    if (!is_congruence(x.table(), p).ok)
        throw ArgumentError("is_closed_congruence: partition is not a congruence");
    return ProductView(x.topology(), x.topology()).is_closed(relation_pairs(p));
}

CosetQuotientResult coset_quotient_group(const TopTernaryStructure& x, const SubSet& h) {
    require_group(x, "coset_quotient_group");
    if (!is_ternary_subgroup(x.table(), h))
        throw ArgumentError("coset_quotient_group: not a ternary subgroup");
    if (!is_normal_subgroup(x.table(), h).normal)
        throw ArgumentError("coset_quotient_group: subgroup is not normal");
    const TernaryTable& t = x.table();
    const int n = t.order();

    std::vector<SubSet> cosets;
    std::vector<int> class_of(n, -1);
    for (int a = 0; a < n; ++a) {
        SubSet coset = left_coset(t, h, a);
        for (size_t k = 0; k < cosets.size() && class_of[a] < 0; ++k)
            if (cosets[k] == coset) class_of[a] = int(k);
        if (class_of[a] < 0) {
            class_of[a] = int(cosets.size());
            cosets.push_back(std::move(coset));
        }
    }
    const int m = int(cosets.size());

    // Induced product, checked over every representative triple.
    std::vector<int> qcube(size_t(m) * m * m, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const size_t idx = (size_t(class_of[a]) * m + class_of[b]) * m + class_of[c];
                const int value = class_of[t.at(a, b, c)];
                if (qcube[idx] < 0)
                    qcube[idx] = value;
                else if (qcube[idx] != value)
                    throw StructuralError(
                        "coset_quotient_group: induced product depends on representatives");
            }
    TernaryTable qtable(m, std::vector<Elem>(qcube.begin(), qcube.end()));
    if (!qtable.verify_associativity())
        throw StructuralError("coset_quotient_group: induced table not associative");

    ElementMap pi(n, m, class_of);
    FiniteTopology qtop = quotient_topology(x.topology(), pi);

    // Inversion via representatives, with representative independence.
    std::vector<int> qinv(m, -1);
    for (int a = 0; a < n; ++a) {
        auto inv = inverse_of(t, a);
        if (!inv)
            throw StateError("coset_quotient_group: element " + std::to_string(a) +
                             " has no inverse");
        const int k = class_of[a];
        const int value = class_of[*inv];
        if (qinv[k] < 0)
            qinv[k] = value;
        else if (qinv[k] != value)
            throw StructuralError(
                "coset_quotient_group: induced inversion depends on representatives");
    }
    ElementMap qinv_map(m, m, qinv);

    TopTernaryStructure quotient(qtable, qtop, x.mode());
    CosetStepReport steps;
    steps.pi_open = is_open_map(pi, x.topology(), qtop);
    steps.mult_continuous = quotient.multiplication_continuous();
    steps.inversion_continuous = is_continuous(qinv_map, qtop, qtop);
    steps.relation_closed =
        ProductView(x.topology(), x.topology()).is_closed(relation_pairs(
            Partition::from_class_ids(class_of)));
    steps.quotient_hausdorff = quotient.hausdorff();
    if (x.mode() == Mode::strict && is_top_ternary_group(x)) {
        if (!steps.pi_open || !steps.mult_continuous)
            throw StructuralError("coset_quotient_group: step I failed");
        if (!steps.inversion_continuous)
            throw StructuralError("coset_quotient_group: step II failed");
        if (!steps.relation_closed || !steps.quotient_hausdorff)
            throw StructuralError("coset_quotient_group: step III failed");
    }
    return {std::move(quotient), std::move(pi), std::move(cosets), steps};
}

QuotientTopReport quotient_top_semigroup(const TopTernaryStructure& x, const Partition& p) {
    QuotientResult qr = quotient_semigroup(x.table(), p);
    FiniteTopology qtop = quotient_topology(x.topology(), qr.natural_map);
    TopTernaryStructure quotient(qr.table, qtop, x.mode());

    const ProductView source3(x.topology(), x.topology(), x.topology());
    const ProductView target3(qtop, qtop, qtop);
    const ElementMap pi3 = ElementMap::triple_power(qr.natural_map);

    QuotientTopReport report{std::move(quotient),
                             qr.natural_map,
                             is_quotient_map(pi3, source3, target3),
                             false,
                             is_closed_congruence(x, p),
                             false,
                             false};
    report.mult_continuous = report.quotient.multiplication_continuous();
    report.quotient_hausdorff = report.quotient.hausdorff();
    SubSet diagonal(qtop.order() * qtop.order());
    for (int k = 0; k < qtop.order(); ++k) diagonal.add(k * qtop.order() + k);
    report.diagonal_closed = ProductView(qtop, qtop).is_closed(diagonal);

    // Induced multiplication needs a continuous base multiplication on top of
    // the quotient-map hypothesis; the Hausdorff conclusion only needs pi x pi
    // to push the closed relation onto the diagonal, so it is asserted without
    // the multiplication hypothesis.
    if (x.multiplication_continuous() && report.pi3_quotient_map && !report.mult_continuous)
        throw StructuralError("quotient_top_semigroup: induced multiplication not continuous");
    if (report.pi3_quotient_map && report.rho_closed && !report.quotient_hausdorff)
        throw StructuralError("quotient_top_semigroup: closed congruence, non-Hausdorff quotient");
    return report;
}

}  // namespace tsg
