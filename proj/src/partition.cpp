#include "tsg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tsg {

namespace {

// Renumber ids so the first element of each class (scanning 0..n-1) gets the
// next unused id.
std::vector<int> normalize_ids(const std::vector<int>& raw) {
    std::vector<int> fresh(raw.size(), -1);
    std::vector<int> out(raw.size());
    int next = 0;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (fresh[raw[i]] < 0) fresh[raw[i]] = next++;
        out[i] = fresh[raw[i]];
    }
    return out;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

}  // namespace

Partition::Partition(int n) : n_(n) {
    if (n <= 0) throw ArgumentError("Partition: order must be positive");
    class_of_.resize(n);
    std::iota(class_of_.begin(), class_of_.end(), 0);
    rebuild_classes();
}

Partition Partition::all_in_one(int n) {
    if (n <= 0) throw ArgumentError("Partition: order must be positive");
    std::vector<int> ids(n, 0);
    return from_class_ids(std::move(ids));
}

Partition Partition::from_class_ids(std::vector<int> ids) {
    if (ids.empty()) throw ArgumentError("Partition: order must be positive");
    const int n = int(ids.size());
    for (int v : ids)
        if (v < 0 || v >= n) throw ArgumentError("Partition: class id out of range");
    Partition p(n);
    p.class_of_ = normalize_ids(ids);
    p.rebuild_classes();
    return p;
}

Partition Partition::from_classes(int n, const std::vector<std::vector<int>>& classes) {
    if (n <= 0) throw ArgumentError("Partition: order must be positive");
    std::vector<int> ids(n, -1);
    int next = 0;
    for (const auto& cls : classes) {
        if (cls.empty()) throw ArgumentError("Partition: empty class");
        for (int x : cls) {
            if (x < 0 || x >= n) throw ArgumentError("Partition: element out of range");
            if (ids[x] >= 0) throw ArgumentError("Partition: element in two classes");
            ids[x] = next;
        }
        ++next;
    }
    for (int x = 0; x < n; ++x)
        if (ids[x] < 0) throw ArgumentError("Partition: element not covered");
    return from_class_ids(std::move(ids));
}

Partition Partition::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n <= 0) throw ArgumentError("Partition: order must be positive");
    Dsu dsu(n);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ArgumentError("Partition: pair element out of range");
        dsu.unite(a, b);
    }
    std::vector<int> ids(n);
    for (int x = 0; x < n; ++x) ids[x] = dsu.find(x);
    return from_class_ids(std::move(ids));
}

Partition Partition::parse(int n, const std::string& text) {
    std::vector<std::vector<int>> classes;
    std::stringstream chunks(text);
    std::string chunk;
    while (std::getline(chunks, chunk, '/')) {
        std::vector<int> cls;
        std::istringstream in(chunk);
        int v;
        while (in >> v) cls.push_back(v);
        if (!in.eof()) throw ArgumentError("Partition: malformed class '" + chunk + "'");
        if (cls.empty()) throw ArgumentError("Partition: empty class in '" + text + "'");
        classes.push_back(std::move(cls));
    }
    if (classes.empty()) throw ArgumentError("Partition: empty text");
    return from_classes(n, classes);
}

std::string Partition::to_string() const {
    std::string out;
    for (int k = 0; k < num_classes(); ++k) {
        if (k) out += '/';
        out += classes_[k].to_string();
    }
    return out;
}

int Partition::class_id(int a) const {
    if (a < 0 || a >= n_) throw ArgumentError("Partition: element out of range");
    return class_of_[a];
}

const SubSet& Partition::class_members(int k) const {
    if (k < 0 || k >= num_classes()) throw ArgumentError("Partition: class id out of range");
    return classes_[k];
}

int Partition::representative(int k) const {
    return class_members(k).elements().front();
}

bool Partition::refines(const Partition& other) const {
    if (n_ != other.n_) throw ArgumentError("Partition: order mismatch");
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (same_class(a, b) && !other.same_class(a, b)) return false;
    return true;
}

void Partition::rebuild_classes() {
    int m = 0;
    for (int id : class_of_) m = std::max(m, id + 1);
    classes_.assign(m, SubSet(n_));
    for (int x = 0; x < n_; ++x) classes_[class_of_[x]].add(x);
}

}  // namespace tsg
