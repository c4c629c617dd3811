#ifndef TSG_ELEMENT_MAP_HPP
#define TSG_ELEMENT_MAP_HPP

#include <vector>

#include "tsg/errors.hpp"
#include "tsg/subset.hpp"

namespace tsg {

// Total function between finite carriers {0..n-1} -> {0..m-1}.
class ElementMap {
  public:
    ElementMap() : source_(0), target_(0) {}
    ElementMap(int source, int target, std::vector<int> image)
        : source_(source), target_(target), image_(std::move(image)) {
        if (source_ < 0 || target_ < 0) throw ArgumentError("ElementMap: negative order");
        if (image_.size() != size_t(source_)) throw ArgumentError("ElementMap: image size mismatch");
        for (int v : image_)
            if (v < 0 || v >= target_) throw ArgumentError("ElementMap: image out of range");
    }

    static ElementMap identity(int n) {
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) im[i] = i;
        return ElementMap(n, n, std::move(im));
    }
    static ElementMap constant(int source, int target, int value) {
        return ElementMap(source, target, std::vector<int>(source, value));
    }

    int source_order() const { return source_; }
    int target_order() const { return target_; }
    int apply(int a) const {
        if (a < 0 || a >= source_) throw ArgumentError("ElementMap: point out of range");
        return image_[a];
    }
    const std::vector<int>& image_vector() const { return image_; }

    bool is_surjective() const {
        std::vector<char> hit(target_, 0);
        for (int v : image_) hit[v] = 1;
        for (char h : hit)
            if (!h) return false;
        return true;
    }

    SubSet image_of(const SubSet& a) const {
        SubSet out(target_);
        a.for_each([&](int x) { out.add(image_[x]); });
        return out;
    }
    SubSet preimage_of(const SubSet& b) const {
        SubSet out(source_);
        for (int x = 0; x < source_; ++x)
            if (b.contains(image_[x])) out.add(x);
        return out;
    }

    // f x f on pair carriers indexed a*n + b.
    static ElementMap pair_power(const ElementMap& f) {
        const int n = f.source_order(), m = f.target_order();
        std::vector<int> im(size_t(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) im[size_t(a) * n + b] = f.apply(a) * m + f.apply(b);
        return ElementMap(n * n, m * m, std::move(im));
    }
    // f x f x f on triple carriers indexed (a*n + b)*n + c.
    static ElementMap triple_power(const ElementMap& f) {
        const int n = f.source_order(), m = f.target_order();
        std::vector<int> im(size_t(n) * n * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    im[(size_t(a) * n + b) * n + c] = (f.apply(a) * m + f.apply(b)) * m + f.apply(c);
        return ElementMap(n * n * n, m * m * m, std::move(im));
    }

    friend ElementMap compose(const ElementMap& outer, const ElementMap& inner) {
        if (inner.target_order() != outer.source_order())
            throw ArgumentError("compose: order mismatch");
        std::vector<int> im(inner.source_order());
        for (int a = 0; a < inner.source_order(); ++a) im[a] = outer.apply(inner.apply(a));
        return ElementMap(inner.source_order(), outer.target_order(), std::move(im));
    }

    bool operator==(const ElementMap& o) const {
        return source_ == o.source_ && target_ == o.target_ && image_ == o.image_;
    }

  private:
    int source_;
    int target_;
    std::vector<int> image_;
};

}  // namespace tsg

#endif  // TSG_ELEMENT_MAP_HPP
