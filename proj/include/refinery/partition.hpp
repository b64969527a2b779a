#pragma once

#include <string>
#include <vector>

namespace refinery {

// Equivalence relation on {0..n-1} stored as a class-id vector.  Ids are
// normalized so that scanning elements in order, first occurrences of ids
// are 0,1,2,...; class k's least member therefore precedes class k+1's.
class Partition {
 public:
  Partition() = default;

  static Partition finest(int n);    // all singletons
  static Partition coarsest(int n);  // a single class (equals finest at n <= 1)
  static Partition from_class_ids(std::vector<int> ids);
  static Partition from_classes(int n, const std::vector<std::vector<int>>& classes);

  int universe_size() const { return static_cast<int>(ids_.size()); }
  int num_classes() const { return num_classes_; }
  int class_of(int x) const { return ids_[x]; }
  bool together(int x, int y) const { return ids_[x] == ids_[y]; }
  const std::vector<int>& class_ids() const { return ids_; }

  std::vector<std::vector<int>> classes() const;   // sorted classes, ascending members
  std::vector<int> representatives() const;        // least member per class, ascending

  // True when every class of this partition lies inside a class of other,
  // i.e. this <= other in the refinement order.
  bool refines(const Partition& other) const;

  std::string to_string() const;  // e.g. [[0,2,4],[1,3,5]]

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> ids_;
  int num_classes_ = 0;
};

// Total order used for all lattice listings: class count descending
// (finer partitions first), ties broken lexicographically on class ids.
bool lattice_order_less(const Partition& a, const Partition& b);

}  // namespace refinery
