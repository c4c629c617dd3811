#include "tsg/group_table.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tsg {

GroupTable::GroupTable(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {
    if (n <= 0) throw ArgumentError("GroupTable: order must be positive");
    if (table_.size() != size_t(n) * n) throw ArgumentError("GroupTable: table has wrong size");
    for (int v : table_)
        if (v < 0 || v >= n) throw ArgumentError("GroupTable: entry out of range");

    identity_ = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw ArgumentError("GroupTable: no identity element");

    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] < 0) throw ArgumentError("GroupTable: element without inverse");
    }
    validate();
}

void GroupTable::validate() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw ArgumentError("GroupTable: operation is not associative");
}

GroupTable GroupTable::cyclic(int n) {
    std::vector<int> table(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[size_t(a) * n + b] = (a + b) % n;
    return GroupTable(n, std::move(table));
}

GroupTable GroupTable::from_permutations(int degree, const std::vector<std::vector<int>>& gens) {
    using Perm = std::vector<int>;
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<Perm> elems{id};
    for (const Perm& g : gens) {
        if (int(g.size()) != degree) throw ArgumentError("from_permutations: degree mismatch");
        elems.insert(g);
    }
    // close under composition
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Perm> cur(elems.begin(), elems.end());
        for (const Perm& p : cur)
            for (const Perm& q : cur) {
                Perm r(degree);
                for (int i = 0; i < degree; ++i) r[i] = p[q[i]];
                if (elems.insert(r).second) grew = true;
            }
    }
    std::vector<Perm> ordered(elems.begin(), elems.end());
    const int n = int(ordered.size());
    auto pos = [&](const Perm& p) {
        return int(std::lower_bound(ordered.begin(), ordered.end(), p) - ordered.begin());
    };
    std::vector<int> table(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Perm r(degree);
            for (int i = 0; i < degree; ++i) r[i] = ordered[a][ordered[b][i]];
            table[size_t(a) * n + b] = pos(r);
        }
    return GroupTable(n, std::move(table));
}

GroupTable GroupTable::symmetric(int degree) {
    if (degree < 1 || degree > 5) throw ArgumentError("symmetric: degree out of range");
    std::vector<std::vector<int>> gens;
    if (degree >= 2) {
        std::vector<int> swap01(degree), cycle(degree);
        std::iota(swap01.begin(), swap01.end(), 0);
        std::swap(swap01[0], swap01[1]);
        for (int i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
        gens = {swap01, cycle};
    }
    return from_permutations(degree, gens);
}

GroupTable GroupTable::dihedral(int sides) {
    if (sides < 3) throw ArgumentError("dihedral: need at least 3 sides");
    std::vector<int> rot(sides), refl(sides);
    for (int i = 0; i < sides; ++i) {
        rot[i] = (i + 1) % sides;
        refl[i] = (sides - i) % sides;
    }
    return from_permutations(sides, {rot, refl});
}

TernaryTable cyclic_ternary(int n) {
    if (n < 1) throw ArgumentError("cyclic_ternary: order must be positive");
    TernaryTable t = TernaryTable::from_function(n, [n](int a, int b, int c) { return (a + b + c) % n; });
    t.verify_associativity();
    return t;
}

TernaryTable heap_from_group(const GroupTable& g) {
    const int n = g.order();
    if (n == 0) throw ArgumentError("heap_from_group: empty group");
    TernaryTable t = TernaryTable::from_function(
        n, [&g](int a, int b, int c) { return g.mul(g.mul(a, g.inverse(b)), c); });
    // a b^-1 c satisfies (abc)de = a(bcd)e only when b^-1 c d^-1 commutes
    // with reordering, i.e. on abelian substrates; elsewhere it is merely
    // para-associative and not a ternary semigroup.
    if (!t.verify_associativity())
        throw ArgumentError("heap_from_group: heap of a non-abelian group is not associative");
    return t;
}

TernaryTable group_ternary(const GroupTable& g) {
    const int n = g.order();
    if (n == 0) throw ArgumentError("group_ternary: empty group");
    TernaryTable t = TernaryTable::from_function(
        n, [&g](int a, int b, int c) { return g.mul(g.mul(a, b), c); });
    t.verify_associativity();
    return t;
}

TernaryTable min_table(int n) {
    if (n < 1) throw ArgumentError("min_table: order must be positive");
    TernaryTable t = TernaryTable::from_function(n, [](int a, int b, int c) { return std::min(a, std::min(b, c)); });
    t.verify_associativity();
    return t;
}

TernaryTable product_table(int n) {
    if (n < 1) throw ArgumentError("product_table: order must be positive");
    TernaryTable t = TernaryTable::from_function(n, [n](int a, int b, int c) { return (a * b * c) % n; });
    t.verify_associativity();
    return t;
}

TernaryTable constant_table(int n, Elem value) {
    if (value < 0 || value >= n) throw ArgumentError("constant_table: value out of range");
    TernaryTable t = TernaryTable::from_function(n, [value](int, int, int) { return value; });
    t.verify_associativity();
    return t;
}

}  // namespace tsg
