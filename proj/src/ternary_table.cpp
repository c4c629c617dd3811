#include "tsg/ternary_table.hpp"

#include <algorithm>
#include <numeric>

namespace tsg {

TernaryTable::TernaryTable(int n, std::vector<Elem> cube) : n_(n), cube_(std::move(cube)) {
    if (n <= 0) throw ArgumentError("TernaryTable: order must be positive");
    if (cube_.size() != size_t(n) * n * n)
        throw ArgumentError("TernaryTable: cube has wrong size");
    for (Elem v : cube_)
        if (v < 0 || v >= n) throw ArgumentError("TernaryTable: cube entry out of range");
}

bool TernaryTable::verify_associativity() {
    assoc_verified_ = is_ternary_semigroup(*this).ok;
    return assoc_verified_;
}

Elem mul3(const TernaryTable& t, Elem a, Elem b, Elem c) {
    const int n = t.order();
    if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n)
        throw ArgumentError("mul3: element out of range");
    return t.at(a, b, c);
}

AssociativityResult is_ternary_semigroup(const TernaryTable& t) {
    const int n = t.order();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                const Elem abc = t.at(a, b, c);
                for (Elem d = 0; d < n; ++d) {
                    const Elem bcd = t.at(b, c, d);
                    for (Elem e = 0; e < n; ++e) {
                        const Elem left = t.at(abc, d, e);
                        if (left != t.at(a, bcd, e) || left != t.at(a, b, t.at(c, d, e)))
                            return {false, {a, b, c, d, e}};
                    }
                }
            }
    return {true, {0, 0, 0, 0, 0}};
}

void require_associative(const TernaryTable& t) {
    if (t.known_associative()) return;
    if (!is_ternary_semigroup(t).ok)
        throw StateError("operation requires a ternary semigroup (table is not associative)");
}

SubSet set_product(const TernaryTable& t, const SubSet& a, const SubSet& b, const SubSet& c) {
    const int n = t.order();
    if (a.order() != n || b.order() != n || c.order() != n)
        throw ArgumentError("set_product: subset carrier mismatch");
    SubSet out(n);
    a.for_each([&](int x) {
        b.for_each([&](int y) {
            c.for_each([&](int z) { out.add(t.at(x, y, z)); });
        });
    });
    return out;
}

bool is_ideal(const TernaryTable& t, const SubSet& ideal) {
    if (ideal.empty()) throw ArgumentError("is_ideal: ideal must be non-empty");
    if (ideal.order() != t.order()) throw ArgumentError("is_ideal: carrier mismatch");
    const SubSet full = SubSet::full_set(t.order());
    return set_product(t, full, full, ideal).is_subset_of(ideal) &&
           set_product(t, full, ideal, full).is_subset_of(ideal) &&
           set_product(t, ideal, full, full).is_subset_of(ideal);
}

std::optional<Elem> inverse_of(const TernaryTable& t, Elem a) {
    require_associative(t);
    const int n = t.order();
    if (a < 0 || a >= n) throw ArgumentError("inverse_of: element out of range");
    std::optional<Elem> found;
    for (Elem b = 0; b < n; ++b) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x)
            ok = t.at(a, b, x) == x && t.at(b, a, x) == x && t.at(x, a, b) == x && t.at(x, b, a) == x;
        if (ok) {
            if (found)
                throw StructuralError("inverse_of: two distinct inverses found for element " + std::to_string(a));
            found = b;
        }
    }
    return found;
}

bool is_ternary_group(const TernaryTable& t) {
    require_associative(t);
    const int n = t.order();
    // abx = c, axb = c, xab = c solvable for all c  <=>  each row map is onto.
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            SubSet left(n), lateral(n), right(n);
            for (Elem x = 0; x < n; ++x) {
                left.add(t.at(a, b, x));
                lateral.add(t.at(a, x, b));
                right.add(t.at(x, a, b));
            }
            if (left.count() != n || lateral.count() != n || right.count() != n) return false;
        }
    return true;
}

TernaryTable restrict_table(const TernaryTable& t, const SubSet& h) {
    const std::vector<int> elems = h.elements();
    std::vector<int> pos(t.order(), -1);
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = int(i);
    const int m = int(elems.size());
    std::vector<Elem> cube(size_t(m) * m * m);
    size_t idx = 0;
    for (int a : elems)
        for (int b : elems)
            for (int c : elems) {
                const Elem v = t.at(a, b, c);
                if (pos[v] < 0) throw ArgumentError("restrict_table: subset is not closed");
                cube[idx++] = pos[v];
            }
    TernaryTable sub(m, std::move(cube));
    if (t.known_associative()) sub.verify_associativity();
    return sub;
}

bool is_ternary_subgroup(const TernaryTable& t, const SubSet& h) {
    if (h.empty()) throw ArgumentError("is_ternary_subgroup: subset must be non-empty");
    require_associative(t);
    if (!set_product(t, h, h, h).is_subset_of(h)) return false;
    TernaryTable sub = restrict_table(t, h);
    sub.verify_associativity();
    return is_ternary_group(sub);
}

static void require_subgroup(const TernaryTable& t, const SubSet& n, const char* who) {
    if (!is_ternary_subgroup(t, n))
        throw ArgumentError(std::string(who) + ": subset is not a ternary subgroup");
}

SubSet left_coset(const TernaryTable& t, const SubSet& n, Elem a) {
    require_subgroup(t, n, "left_coset");
    return set_product(t, SubSet::singleton(t.order(), a), n, n);
}

SubSet right_coset(const TernaryTable& t, const SubSet& n, Elem a) {
    require_subgroup(t, n, "right_coset");
    return set_product(t, n, n, SubSet::singleton(t.order(), a));
}

NormalityReport is_normal_subgroup(const TernaryTable& t, const SubSet& h) {
    if (!is_ternary_group(t))
        throw ArgumentError("is_normal_subgroup: table is not a ternary group");
    require_subgroup(t, h, "is_normal_subgroup");
    const int n = t.order();

    NormalityReport rep{};
    rep.cond_b = true;
    for (Elem g = 0; g < n && rep.cond_b; ++g)
        for (Elem k = 0; k < n && rep.cond_b; ++k) {
            const SubSet gs = SubSet::singleton(n, g), ks = SubSet::singleton(n, k);
            rep.cond_b = set_product(t, gs, ks, h) == set_product(t, h, gs, ks);
        }

    rep.cond_c = true;
    for (Elem g = 0; g < n && rep.cond_c; ++g) {
        const SubSet gs = SubSet::singleton(n, g);
        const SubSet hhg = set_product(t, h, h, gs);
        const SubSet ghh = set_product(t, gs, h, h);
        const SubSet hgh = set_product(t, h, gs, h);
        rep.cond_c = hhg == ghh && ghh == hgh;
    }

    rep.a_all_hold = true;
    rep.a_fully_evaluated = true;
    for (Elem g = 0; g < n; ++g) {
        const std::optional<Elem> gi = inverse_of(t, g);
        if (!gi) {
            rep.a_fully_evaluated = false;
            continue;
        }
        ++rep.a_evaluated;
        const SubSet gs = SubSet::singleton(n, g), gis = SubSet::singleton(n, *gi);
        if (!set_product(t, gs, h, gis).is_subset_of(h)) rep.a_all_hold = false;
    }

    rep.normal = rep.cond_b;
    if (rep.cond_c != rep.cond_b)
        throw StructuralError("normality conditions (b) and (c) disagree");
    if (rep.a_evaluated > 0 && !rep.a_all_hold && rep.cond_b)
        throw StructuralError("normality condition (a) refuted while (b) holds");
    if (rep.a_fully_evaluated && rep.a_all_hold && !rep.cond_b)
        throw StructuralError("normality condition (a) holds while (b) fails");
    return rep;
}

TernaryTable relabel(const TernaryTable& t, const std::vector<int>& perm) {
    const int n = t.order();
    if (int(perm.size()) != n) throw ArgumentError("relabel: permutation size mismatch");
    std::vector<Elem> cube(size_t(n) * n * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                cube[(size_t(perm[a]) * n + perm[b]) * n + perm[c]] = perm[t.at(a, b, c)];
    return TernaryTable(n, std::move(cube));
}

TernaryTable canonical_form(const TernaryTable& t) {
    const int n = t.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    TernaryTable best = t;
    while (std::next_permutation(perm.begin(), perm.end())) {
        TernaryTable cand = relabel(t, perm);
        if (cand.cube() < best.cube()) best = cand;
    }
    return best;
}

bool is_canonical(const TernaryTable& t) {
    return canonical_form(t).cube() == t.cube();
}

}  // namespace tsg
