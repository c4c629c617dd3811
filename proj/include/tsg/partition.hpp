#ifndef TSG_PARTITION_HPP
#define TSG_PARTITION_HPP

#include <string>
#include <utility>
#include <vector>

#include "tsg/element_map.hpp"
#include "tsg/errors.hpp"
#include "tsg/subset.hpp"

namespace tsg {

// Partition of {0..n-1}. Class ids are normalized to first-occurrence order,
// so the representative (minimum element) of class k appears before that of
// class k+1 and the id vector itself is a canonical form.
class Partition {
  public:
    explicit Partition(int n);  // diagonal: every element its own class
    static Partition diagonal(int n) { return Partition(n); }
    static Partition all_in_one(int n);
    static Partition from_class_ids(std::vector<int> ids);
    static Partition from_classes(int n, const std::vector<std::vector<int>>& classes);
    static Partition from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    // Text form: classes as slash-separated element lists, "0 2 4/1 3 5".
    static Partition parse(int n, const std::string& text);
    std::string to_string() const;

    int order() const { return n_; }
    int num_classes() const { return int(classes_.size()); }
    int class_id(int a) const;
    bool same_class(int a, int b) const { return class_id(a) == class_id(b); }
    const SubSet& class_members(int k) const;
    int representative(int k) const;  // minimum element of class k
    const std::vector<int>& class_ids() const { return class_of_; }

    // Natural map a -> class_id(a).
    ElementMap natural_map() const { return ElementMap(n_, num_classes(), class_of_); }

    bool refines(const Partition& other) const;

    bool operator==(const Partition& o) const { return n_ == o.n_ && class_of_ == o.class_of_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return class_of_ < o.class_of_; }

  private:
    void rebuild_classes();

    int n_;
    std::vector<int> class_of_;
    std::vector<SubSet> classes_;
};

}  // namespace tsg

#endif  // TSG_PARTITION_HPP
