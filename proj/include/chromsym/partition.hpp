#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace chromsym {

// 1-based cell of a Ferrers diagram, English style (row 1 on top).
struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Integer partition: weakly decreasing positive parts. Immutable value type.
// The empty partition (of 0) is legal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // throws if not a partition

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }              // d = sum of parts
  int length() const { return (int)parts_.size(); }  // ell
  bool empty() const { return parts_.empty(); }

  // 1-based part access; rows beyond length() have length 0.
  int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }

  bool contains(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
  }

  // Multiplicity of part value k.
  int multiplicity(int k) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of d in reverse lexicographic order: (d) first, (1^d) last.
// This is the canonical indexing order for every matrix and coefficient
// vector in the library. Cached per degree; the reference stays valid.
const std::vector<Partition>& partitions_of(int d);

Partition conjugate(const Partition& p);

// Hook predicates. A hook has no (2,2) cell. Both throw on the empty
// partition, whose hook status is undefined.
bool is_hook(const Partition& p);
int first_column_length(const Partition& p);

// Dominance order: a >= b iff prefix sums of a dominate those of b.
bool dominates(const Partition& a, const Partition& b);

// Text syntax: comma-separated parts ("3,1,1"); empty string = empty partition.
Partition parse_partition(const std::string& text);
std::string to_string(const Partition& p);

// Position of p in partitions_of(p.size()); lists are small, cached per degree.
int canonical_index(const Partition& p);

// Sorts a composition's parts into a partition (zero parts dropped).
Partition partition_from_composition(const std::vector<int>& comp);

}  // namespace chromsym
