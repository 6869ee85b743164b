#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace qdeg {

// Diagram cell, 1-indexed, French convention: row 1 is the bottom row.
// In a shifted diagram row r occupies columns r .. r+gamma_r-1, so every
// cell satisfies row <= col and the main diagonal is row == col.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int part(int r) const { return parts_[r - 1]; }  // 1-indexed row length
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  std::string str() const;
  static Partition parse(std::string_view text);
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Strictly decreasing sequence of positive integers.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int part(int r) const { return parts_[r - 1]; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  std::string str() const;
  static StrictPartition parse(std::string_view text);
  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

// All partitions of n, decreasing lexicographic order. n >= 1.
std::vector<Partition> partitions_of(int n);
// All strict partitions of n, decreasing lexicographic order. n >= 1.
std::vector<StrictPartition> strict_partitions_of(int n);

// Cells {(r,c) : r <= c <= r+gamma_r-1}, sorted.
std::vector<Cell> shifted_diagram(const StrictPartition& gamma);

// The shifted diagram glued with its transpose along the main diagonal,
// as an ordinary partition; size 2|gamma| - length(gamma).
Partition sym_diagram(const StrictPartition& gamma);

struct BoundaryCells {
  std::vector<Cell> addable;
  std::vector<Cell> removable;
};

// Cells whose addition/removal yields a valid diagram of the same kind,
// decided by exhaustive validity checking.
BoundaryCells boundary_cells(const Partition& lambda);
BoundaryCells boundary_cells(const StrictPartition& gamma);

// Shared "3,1" <-> parts plumbing. Empty text parses to the empty shape.
std::string format_parts(const std::vector<int>& parts);
std::vector<int> parse_parts(std::string_view text);

}  // namespace qdeg
