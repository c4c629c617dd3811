#include "tsg/topology.hpp"

#include <algorithm>
#include <set>

namespace tsg {

namespace {

constexpr size_t kFamilyCap = size_t(1) << 16;
constexpr int kProductCarrierCap = 512;

SubSet subset_from_mask(int n, uint32_t mask) {
    SubSet s(n);
    for (int i = 0; i < n; ++i)
        if (mask & (uint32_t(1) << i)) s.add(i);
    return s;
}

void close_under(std::set<SubSet>& family, bool unions) {
    std::vector<SubSet> queue(family.begin(), family.end());
    while (!queue.empty()) {
        SubSet s = std::move(queue.back());
        queue.pop_back();
        std::vector<SubSet> snapshot(family.begin(), family.end());
        for (const SubSet& t : snapshot) {
            SubSet u = unions ? (s | t) : (s & t);
            if (family.insert(u).second) {
                if (family.size() > kFamilyCap)
                    throw ArgumentError("topology family above 2^16 members");
                queue.push_back(std::move(u));
            }
        }
    }
}

}  // namespace

FiniteTopology::FiniteTopology(int n, std::vector<SubSet> family)
    : n_(n), family_(std::move(family)) {
    if (n_ < 0) throw ArgumentError("FiniteTopology: negative order");
    for (const SubSet& u : family_)
        if (u.order() != n_) throw ArgumentError("FiniteTopology: open set carrier mismatch");
    std::sort(family_.begin(), family_.end());
    family_.erase(std::unique(family_.begin(), family_.end()), family_.end());
    if (family_.size() > kFamilyCap) throw ArgumentError("FiniteTopology: family above 2^16 members");
    auto member = [&](const SubSet& u) {
        return std::binary_search(family_.begin(), family_.end(), u);
    };
    if (!member(SubSet::empty_set(n_))) throw ArgumentError("FiniteTopology: missing empty set");
    if (!member(SubSet::full_set(n_))) throw ArgumentError("FiniteTopology: missing full set");
    for (size_t i = 0; i < family_.size(); ++i)
        for (size_t j = i + 1; j < family_.size(); ++j) {
            if (!member(family_[i] | family_[j]))
                throw ArgumentError("FiniteTopology: family not closed under union");
            if (!member(family_[i] & family_[j]))
                throw ArgumentError("FiniteTopology: family not closed under intersection");
        }
    min_nbhds_.reserve(n_);
    for (int x = 0; x < n_; ++x) {
        SubSet nb = SubSet::full_set(n_);
        for (const SubSet& u : family_)
            if (u.contains(x)) nb &= u;
        min_nbhds_.push_back(std::move(nb));
    }
}

FiniteTopology FiniteTopology::discrete(int n) {
    if (n < 0 || n > 16) throw ArgumentError("discrete: order out of range");
    std::vector<SubSet> family;
    family.reserve(size_t(1) << n);
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask)
        family.push_back(subset_from_mask(n, mask));
    return FiniteTopology(n, std::move(family));
}

FiniteTopology FiniteTopology::indiscrete(int n) {
    return FiniteTopology(n, {SubSet::empty_set(n), SubSet::full_set(n)});
}

bool FiniteTopology::is_open(const SubSet& u) const {
    if (u.order() != n_) throw ArgumentError("is_open: carrier mismatch");
    return std::binary_search(family_.begin(), family_.end(), u);
}

const SubSet& FiniteTopology::min_nbhd(int x) const {
    if (x < 0 || x >= n_) throw ArgumentError("min_nbhd: point out of range");
    return min_nbhds_[x];
}

FiniteTopology topology_from_subbasis(int n, const std::vector<SubSet>& sets) {
    std::set<SubSet> family;
    family.insert(SubSet::full_set(n));
    for (const SubSet& s : sets) {
        if (s.order() != n) throw ArgumentError("topology_from_subbasis: carrier mismatch");
        family.insert(s);
    }
    close_under(family, false);
    family.insert(SubSet::empty_set(n));
    close_under(family, true);
    return FiniteTopology(n, {family.begin(), family.end()});
}

FiniteTopology product_topology(const FiniteTopology& t1, const FiniteTopology& t2) {
    const int n1 = t1.order(), n2 = t2.order();
    if (n1 * n2 > kProductCarrierCap)
        throw ArgumentError("product_topology: carrier above 512 points");
    const int n = n1 * n2;
    std::set<SubSet> family;
    for (const SubSet& u : t1.opens())
        for (const SubSet& v : t2.opens()) {
            SubSet box(n);
            u.for_each([&](int a) { v.for_each([&](int b) { box.add(a * n2 + b); }); });
            family.insert(std::move(box));
            if (family.size() > kFamilyCap)
                throw ArgumentError("product_topology: family above 2^16 members");
        }
    close_under(family, true);
    return FiniteTopology(n, {family.begin(), family.end()});
}

FiniteTopology product_topology(const FiniteTopology& t1, const FiniteTopology& t2,
                                const FiniteTopology& t3) {
    const int n1 = t1.order(), n2 = t2.order(), n3 = t3.order();
    if (n1 * n2 * n3 > kProductCarrierCap)
        throw ArgumentError("product_topology: carrier above 512 points");
    const int n = n1 * n2 * n3;
    std::set<SubSet> family;
    for (const SubSet& u : t1.opens())
        for (const SubSet& v : t2.opens())
            for (const SubSet& w : t3.opens()) {
                SubSet box(n);
                u.for_each([&](int a) {
                    v.for_each([&](int b) {
                        w.for_each([&](int c) { box.add((a * n2 + b) * n3 + c); });
                    });
                });
                family.insert(std::move(box));
                if (family.size() > kFamilyCap)
                    throw ArgumentError("product_topology: family above 2^16 members");
            }
    close_under(family, true);
    return FiniteTopology(n, {family.begin(), family.end()});
}

FiniteTopology quotient_topology(const FiniteTopology& tx, const ElementMap& q) {
    if (q.source_order() != tx.order()) throw ArgumentError("quotient_topology: source mismatch");
    if (!q.is_surjective()) throw ArgumentError("quotient_topology: map not surjective");
    const int m = q.target_order();
    if (m > 16) throw ArgumentError("quotient_topology: target order above 16");
    std::vector<SubSet> family;
    for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
        SubSet u = subset_from_mask(m, mask);
        if (tx.is_open(q.preimage_of(u))) family.push_back(std::move(u));
    }
    return FiniteTopology(m, std::move(family));
}

bool is_continuous(const ElementMap& f, const FiniteTopology& tx, const FiniteTopology& ty) {
    if (f.source_order() != tx.order() || f.target_order() != ty.order())
        throw ArgumentError("is_continuous: carrier mismatch");
    for (const SubSet& u : ty.opens())
        if (!tx.is_open(f.preimage_of(u))) return false;
    return true;
}

bool is_open_map(const ElementMap& f, const FiniteTopology& tx, const FiniteTopology& ty) {
    if (f.source_order() != tx.order() || f.target_order() != ty.order())
        throw ArgumentError("is_open_map: carrier mismatch");
    for (const SubSet& u : tx.opens())
        if (!ty.is_open(f.image_of(u))) return false;
    return true;
}

bool is_closed_map(const ElementMap& f, const FiniteTopology& tx, const FiniteTopology& ty) {
    if (f.source_order() != tx.order() || f.target_order() != ty.order())
        throw ArgumentError("is_closed_map: carrier mismatch");
    for (const SubSet& u : tx.opens())
        if (!ty.is_closed(f.image_of(u.complement()))) return false;
    return true;
}

bool is_quotient_map(const ElementMap& f, const FiniteTopology& tx, const FiniteTopology& ty) {
    if (f.source_order() != tx.order() || f.target_order() != ty.order())
        throw ArgumentError("is_quotient_map: carrier mismatch");
    if (!f.is_surjective()) return false;
    if (!is_continuous(f, tx, ty)) return false;
    return ty == quotient_topology(tx, f);
}

SubSet closure(const FiniteTopology& t, const SubSet& a) {
    if (a.order() != t.order()) throw ArgumentError("closure: carrier mismatch");
    SubSet miss(t.order());
    for (const SubSet& u : t.opens())
        if (!u.intersects(a)) miss |= u;
    return miss.complement();
}

SubSet interior(const FiniteTopology& t, const SubSet& a) {
    if (a.order() != t.order()) throw ArgumentError("interior: carrier mismatch");
    SubSet inside(t.order());
    for (const SubSet& u : t.opens())
        if (u.is_subset_of(a)) inside |= u;
    return inside;
}

bool is_hausdorff(const FiniteTopology& t) {
    const int n = t.order();
    bool separated = true;
    for (int x = 0; x < n && separated; ++x)
        for (int y = x + 1; y < n && separated; ++y) {
            bool found = false;
            for (const SubSet& u : t.opens()) {
                if (!u.contains(x)) continue;
                for (const SubSet& v : t.opens())
                    if (v.contains(y) && !u.intersects(v)) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            separated = found;
        }
    const bool discrete = n <= 16 && t.opens().size() == (size_t(1) << n);
    if (separated != discrete)
        throw StructuralError("is_hausdorff: scan disagrees with the discreteness cross-check");
    return separated;
}

SubSet saturate(const ElementMap& q, const SubSet& a) {
    if (a.order() != q.source_order()) throw ArgumentError("saturate: carrier mismatch");
    return q.preimage_of(q.image_of(a));
}

SubSet saturated_interior(const ElementMap& q, const SubSet& v) {
    if (v.order() != q.source_order()) throw ArgumentError("saturated_interior: carrier mismatch");
    SubSet out(q.source_order());
    for (int k = 0; k < q.target_order(); ++k) {
        SubSet fiber = q.preimage_of(SubSet::singleton(q.target_order(), k));
        if (fiber.is_subset_of(v)) out |= fiber;
    }
    return out;
}

std::optional<SeparatingBox> find_separating_box(const ElementMap& f, const FiniteTopology& tx,
                                                 const FiniteTopology& ty, const FiniteTopology& tz,
                                                 const FiniteTopology& tw, const SubSet& a,
                                                 const SubSet& b, const SubSet& c,
                                                 const SubSet& d) {
    const int n1 = tx.order(), n2 = ty.order(), n3 = tz.order();
    if (f.source_order() != n1 * n2 * n3 || f.target_order() != tw.order())
        throw ArgumentError("find_separating_box: carrier mismatch");
    if (a.order() != n1 || b.order() != n2 || c.order() != n3 || d.order() != tw.order())
        throw ArgumentError("find_separating_box: set carrier mismatch");
    if (!tw.is_open(d)) throw ArgumentError("find_separating_box: target set not open");
    if (!is_continuous(f, ProductView(tx, ty, tz), tw))
        throw ArgumentError("find_separating_box: map not continuous");
    auto maps_into = [&](const SubSet& p, const SubSet& q, const SubSet& r) {
        for (int x : p.elements())
            for (int y : q.elements())
                for (int z : r.elements())
                    if (!d.contains(f.apply((x * n2 + y) * n3 + z))) return false;
        return true;
    };
    if (!maps_into(a, b, c))
        throw ArgumentError("find_separating_box: image of A x B x C leaves D");
    SubSet p(n1), q(n2), r(n3);
    a.for_each([&](int x) { p |= tx.min_nbhd(x); });
    b.for_each([&](int y) { q |= ty.min_nbhd(y); });
    c.for_each([&](int z) { r |= tz.min_nbhd(z); });
    if (!maps_into(p, q, r))
        throw StructuralError("find_separating_box: neighborhood box leaves D");
    return SeparatingBox{std::move(p), std::move(q), std::move(r)};
}

bool is_weak_topology_sum(const FiniteTopology& t, const std::vector<SubSet>& parts) {
    const int n = t.order();
    if (n > 16) throw ArgumentError("is_weak_topology_sum: order above 16");
    SubSet covered(n);
    for (const SubSet& y : parts) {
        if (y.order() != n) throw ArgumentError("is_weak_topology_sum: part carrier mismatch");
        covered |= y;
    }
    if (covered != SubSet::full_set(n))
        throw ArgumentError("is_weak_topology_sum: parts do not cover the carrier");
    std::set<SubSet> opens(t.opens().begin(), t.opens().end());
    std::vector<std::set<SubSet>> trace_opens;
    for (const SubSet& y : parts) {
        std::set<SubSet> traces;
        for (const SubSet& u : t.opens()) traces.insert(u & y);
        trace_opens.push_back(std::move(traces));
    }
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        SubSet set = subset_from_mask(n, mask);
        const bool closed_whole = opens.count(set.complement()) > 0;
        bool closed_parts = true;
        for (size_t i = 0; i < parts.size() && closed_parts; ++i)
            closed_parts = trace_opens[i].count(parts[i] - set) > 0;
        if (closed_whole != closed_parts) return false;
    }
    return true;
}

bool is_regular_ideal(const TernaryTable& t, const FiniteTopology& ts, const SubSet& ideal) {
    if (ts.order() != t.order() || ideal.order() != t.order())
        throw ArgumentError("is_regular_ideal: carrier mismatch");
    if (!is_ideal(t, ideal)) throw ArgumentError("is_regular_ideal: set is not an ideal");
    if (!ts.is_closed(ideal)) throw ArgumentError("is_regular_ideal: ideal not closed");
    for (int s = 0; s < ts.order(); ++s) {
        if (ideal.contains(s)) continue;
        bool found = false;
        for (const SubSet& v : ts.opens()) {
            if (!v.contains(s)) continue;
            for (const SubSet& w : ts.opens())
                if (ideal.is_subset_of(w) && !v.intersects(w)) {
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found) return false;
    }
    return true;
}

SubSet rees_carrier(const FiniteTopology& ts, const SubSet& ideal) {
    if (ideal.order() != ts.order()) throw ArgumentError("rees_carrier: carrier mismatch");
    return interior(ts, ideal).complement();
}

FiniteTopology rees_space(const FiniteTopology& ts, const SubSet& ideal) {
    if (ideal.empty()) throw ArgumentError("rees_space: ideal must be non-empty");
    const SubSet carrier = rees_carrier(ts, ideal);
    const auto survivors = carrier.elements();
    std::vector<int> new_index(ts.order(), -1);
    for (size_t i = 0; i < survivors.size(); ++i) new_index[survivors[i]] = int(i);
    const int k = int(survivors.size());
    std::set<SubSet> traces;
    for (const SubSet& open : ts.opens()) {
        if (open.intersects(ideal) && !ideal.is_subset_of(open)) continue;
        SubSet trace(k);
        open.for_each([&](int x) {
            if (new_index[x] >= 0) trace.add(new_index[x]);
        });
        traces.insert(std::move(trace));
    }
    return FiniteTopology(k, {traces.begin(), traces.end()});
}

std::vector<FiniteTopology> all_topologies(int n) {
    if (n < 0 || n > 4) throw ArgumentError("all_topologies: order above 4");
    if (n == 0) return {FiniteTopology()};
    std::vector<SubSet> nontrivial;
    for (uint32_t mask = 1; mask + 1 < (uint32_t(1) << n); ++mask)
        nontrivial.push_back(subset_from_mask(n, mask));
    std::vector<FiniteTopology> out;
    for (uint32_t pick = 0; pick < (uint32_t(1) << nontrivial.size()); ++pick) {
        std::vector<SubSet> family{SubSet::empty_set(n), SubSet::full_set(n)};
        for (size_t i = 0; i < nontrivial.size(); ++i)
            if (pick & (uint32_t(1) << i)) family.push_back(nontrivial[i]);
        std::set<SubSet> members(family.begin(), family.end());
        bool closed = true;
        for (size_t i = 0; i < family.size() && closed; ++i)
            for (size_t j = i + 1; j < family.size() && closed; ++j)
                closed = members.count(family[i] | family[j]) > 0 &&
                         members.count(family[i] & family[j]) > 0;
        if (closed) out.emplace_back(n, std::move(family));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ProductView::ProductView(const FiniteTopology& t1, const FiniteTopology& t2) { init({&t1, &t2}); }

ProductView::ProductView(const FiniteTopology& t1, const FiniteTopology& t2,
                         const FiniteTopology& t3) {
    init({&t1, &t2, &t3});
}

void ProductView::init(const std::vector<const FiniteTopology*>& factors) {
    total_ = 1;
    for (const FiniteTopology* t : factors) {
        orders_.push_back(t->order());
        std::vector<SubSet> nbhds;
        for (int x = 0; x < t->order(); ++x) nbhds.push_back(t->min_nbhd(x));
        factor_nbhds_.push_back(std::move(nbhds));
        total_ *= t->order();
    }
    if (total_ > kProductCarrierCap) throw ArgumentError("ProductView: carrier above 512 points");
}

SubSet ProductView::min_nbhd(int point) const {
    if (point < 0 || point >= total_) throw ArgumentError("min_nbhd: point out of range");
    const int k = int(orders_.size());
    std::vector<int> digits(k);
    int rest = point;
    for (int i = k - 1; i >= 0; --i) {
        digits[i] = rest % orders_[i];
        rest /= orders_[i];
    }
    SubSet box(total_);
    auto fill = [&](auto&& self, int factor, int prefix) -> void {
        if (factor == k) {
            box.add(prefix);
            return;
        }
        factor_nbhds_[factor][digits[factor]].for_each(
            [&](int v) { self(self, factor + 1, prefix * orders_[factor] + v); });
    };
    fill(fill, 0, 0);
    return box;
}

bool ProductView::is_open(const SubSet& u) const {
    if (u.order() != total_) throw ArgumentError("is_open: carrier mismatch");
    bool ok = true;
    u.for_each([&](int x) {
        if (ok && !min_nbhd(x).is_subset_of(u)) ok = false;
    });
    return ok;
}

bool is_continuous(const ElementMap& f, const ProductView& px, const FiniteTopology& ty) {
    if (f.source_order() != px.order() || f.target_order() != ty.order())
        throw ArgumentError("is_continuous: carrier mismatch");
    for (int x = 0; x < px.order(); ++x)
        if (!f.image_of(px.min_nbhd(x)).is_subset_of(ty.min_nbhd(f.apply(x)))) return false;
    return true;
}

bool is_continuous(const ElementMap& f, const ProductView& px, const ProductView& py) {
    if (f.source_order() != px.order() || f.target_order() != py.order())
        throw ArgumentError("is_continuous: carrier mismatch");
    for (int x = 0; x < px.order(); ++x)
        if (!f.image_of(px.min_nbhd(x)).is_subset_of(py.min_nbhd(f.apply(x)))) return false;
    return true;
}

std::vector<SubSet> final_min_nbhds(const ProductView& source, const ElementMap& f) {
    if (f.source_order() != source.order())
        throw ArgumentError("final_min_nbhds: carrier mismatch");
    if (!f.is_surjective()) throw ArgumentError("final_min_nbhds: map not surjective");
    const int m = f.target_order();
    // step[q]: points every open set containing q must also contain.
    std::vector<SubSet> step(m, SubSet(m));
    for (int x = 0; x < source.order(); ++x)
        step[f.apply(x)] |= f.image_of(source.min_nbhd(x));
    std::vector<SubSet> out;
    for (int q0 = 0; q0 < m; ++q0) {
        SubSet reach = SubSet::singleton(m, q0);
        bool grew = true;
        while (grew) {
            grew = false;
            SubSet next = reach;
            reach.for_each([&](int q) { next |= step[q]; });
            if (next != reach) {
                reach = std::move(next);
                grew = true;
            }
        }
        out.push_back(std::move(reach));
    }
    return out;
}

bool is_quotient_map(const ElementMap& f, const ProductView& px, const ProductView& py) {
    if (f.source_order() != px.order() || f.target_order() != py.order())
        throw ArgumentError("is_quotient_map: carrier mismatch");
    if (!f.is_surjective()) return false;
    if (!is_continuous(f, px, py)) return false;
    const auto finals = final_min_nbhds(px, f);
    for (int q = 0; q < py.order(); ++q)
        if (finals[q] != py.min_nbhd(q)) return false;
    return true;
}

}  // namespace tsg
