#ifndef TSG_SUBSET_HPP
#define TSG_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tsg/errors.hpp"

namespace tsg {

// Subset of a carrier {0..n-1} as a fixed-width bit vector.
// Bits above index n-1 are kept zero so that equality and ordering are
// plain word comparisons.
class SubSet {
  public:
    SubSet() : n_(0) {}
    explicit SubSet(int n) : n_(n), words_((n + 63) / 64, 0) {
        if (n < 0) throw ArgumentError("SubSet: negative carrier order");
    }
    SubSet(int n, std::initializer_list<int> elems) : SubSet(n) {
        for (int e : elems) add(e);
    }

    static SubSet empty_set(int n) { return SubSet(n); }
    static SubSet full_set(int n) {
        SubSet s(n);
        for (int i = 0; i < n; ++i) s.add(i);
        return s;
    }
    static SubSet singleton(int n, int e) {
        SubSet s(n);
        s.add(e);
        return s;
    }
    static SubSet of(int n, const std::vector<int>& elems) {
        SubSet s(n);
        for (int e : elems) s.add(e);
        return s;
    }

    int order() const { return n_; }

    bool contains(int e) const {
        check(e);
        return (words_[e >> 6] >> (e & 63)) & 1u;
    }
    void add(int e) {
        check(e);
        words_[e >> 6] |= uint64_t(1) << (e & 63);
    }
    void remove(int e) {
        check(e);
        words_[e >> 6] &= ~(uint64_t(1) << (e & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    SubSet& operator|=(const SubSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    SubSet& operator&=(const SubSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    SubSet& operator-=(const SubSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend SubSet operator|(SubSet a, const SubSet& b) { return a |= b; }
    friend SubSet operator&(SubSet a, const SubSet& b) { return a &= b; }
    friend SubSet operator-(SubSet a, const SubSet& b) { return a -= b; }

    SubSet complement() const {
        SubSet r = full_set(n_);
        r -= *this;
        return r;
    }

    bool is_subset_of(const SubSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const SubSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const SubSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const SubSet& o) const { return !(*this == o); }

    // Numeric order with element 0 as the least significant bit; gives the
    // canonical ordering used for open-set families and reports.
    bool operator<(const SubSet& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (size_t i = words_.size(); i-- > 0;)
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        return false;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(int(wi * 64) + b);
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(int(wi * 64) + b);
                w &= w - 1;
            }
        }
    }

    size_t hash() const {
        size_t h = std::hash<int>{}(n_);
        for (uint64_t w : words_) h = h * 1099511628211ull + std::hash<uint64_t>{}(w);
        return h;
    }

    // "{}" for the empty set, otherwise space-separated elements.
    std::string to_string() const {
        if (empty()) return "{}";
        std::string out;
        bool first = true;
        for_each([&](int e) {
            if (!first) out += ' ';
            out += std::to_string(e);
            first = false;
        });
        return out;
    }

  private:
    void check(int e) const {
        if (e < 0 || e >= n_) throw ArgumentError("SubSet: element " + std::to_string(e) + " out of range [0," + std::to_string(n_) + ")");
    }

    int n_;
    std::vector<uint64_t> words_;
};

struct SubSetHash {
    size_t operator()(const SubSet& s) const { return s.hash(); }
};

}  // namespace tsg

#endif  // TSG_SUBSET_HPP
