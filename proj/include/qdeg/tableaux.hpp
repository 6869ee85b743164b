#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdeg/shapes.hpp"

namespace qdeg {

// Thrown by the text parsers; the message names the violated invariant.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an operation produces an invalid tableau. Signals a bug in
// the caller or in the involution machinery, never expected behavior.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

struct Entry {
  int value = 0;
  bool marked = false;
  friend auto operator<=>(const Entry&, const Entry&) = default;
};

// Subset of [n-1] attached to a degree n. Bitmask member i is bit i-1.
class DescentSet {
 public:
  DescentSet() = default;
  DescentSet(int degree, std::initializer_list<int> members);
  static DescentSet from_mask(int degree, uint32_t mask);
  static DescentSet from_members(int degree, const std::vector<int>& members);

  int degree() const { return degree_; }
  uint32_t mask() const { return mask_; }
  bool contains(int i) const { return i >= 1 && i < degree_ && (mask_ >> (i - 1) & 1u); }
  std::vector<int> members() const;
  std::string str() const;  // "{1,3}"

  // {d-h+1 : d in D, h <= d < i}, of degree i-h+1. Requires 1 <= h <= i <= degree.
  DescentSet restricted(int h, int i) const;

  friend auto operator<=>(const DescentSet&, const DescentSet&) = default;

 private:
  int degree_ = 0;
  uint32_t mask_ = 0;
};

inline DescentSet restrict_descents(const DescentSet& d, int h, int i) {
  return d.restricted(h, i);
}

using Word = std::vector<int>;

struct StandardYoungTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // rows[0] is the bottom row
  friend bool operator==(const StandardYoungTableau&, const StandardYoungTableau&) = default;
};

// Bijective signed filling of a shifted diagram. Letters are distinct
// positive integers (contiguous 1..n for a standalone tableau, arbitrary
// for a concatenation factor); absolute values increase strictly along
// rows and up columns; no cell on the main diagonal is marked.
struct SignedShiftedTableau {
  StrictPartition shape;
  std::vector<std::vector<Entry>> rows;  // rows[r-1][j] sits at cell (r, r+j)
  friend bool operator==(const SignedShiftedTableau&, const SignedShiftedTableau&) = default;
};

// Two shifted factors side by side, together a bijective signed filling
// by [n]; no marks on either factor's main diagonal.
struct ConcatTableau {
  SignedShiftedTableau left, right;
  friend bool operator==(const ConcatTableau&, const ConcatTableau&) = default;
};

// --- reading words and descents ---

// Rows left to right, top row first.
Word row_reading_word(const StandardYoungTableau& t);

// For each column index i from largest to 1: marked entries of column i
// bottom to top, then unmarked entries of row i left to right.
Word hook_reading_word(const SignedShiftedTableau& s);

// Value-based descents of a permutation of [n]: {i : i right of i+1}.
DescentSet descent_set(const Word& w);

DescentSet descent_set(const StandardYoungTableau& t);
DescentSet descent_set(const SignedShiftedTableau& s);
// Descents of hook(left) hook(right).
DescentSet descent_set(const ConcatTableau& st);

// Positions j with w[j] > w[j+1] (1-indexed), for arbitrary distinct letters.
DescentSet word_descent_positions(const Word& w);

// --- enumeration ---

// Complete duplicate-free lists, sorted by serialization.
std::vector<StandardYoungTableau> generate_syt(const Partition& lambda);
std::vector<SignedShiftedTableau> generate_sst(const StrictPartition& gamma);
std::vector<ConcatTableau> generate_tensor(const StrictPartition& gamma,
                                           const StrictPartition& delta);

// Row-by-row identity filling; the unique tableau whose descent set is
// the set of proper partial sums of gamma.
SignedShiftedTableau superstandard(const StrictPartition& gamma);

// --- validation ---

// Throw ParseError naming the violated invariant. The letter-set variant
// accepts arbitrary distinct letters (concatenation factors).
void validate(const StandardYoungTableau& t);
void validate(const SignedShiftedTableau& s, bool require_contiguous_letters = true);
void validate(const ConcatTableau& st);

// --- text and structured forms ---

// Grammar: rows bottom to top separated by "/", entries comma-separated,
// marked entries suffixed with "'", factors separated by "|".
std::string format(const StandardYoungTableau& t);
std::string format(const SignedShiftedTableau& s);
std::string format(const ConcatTableau& st);
StandardYoungTableau parse_syt(std::string_view text);
SignedShiftedTableau parse_sst(std::string_view text);
ConcatTableau parse_tensor(std::string_view text);

// {shape, rows: [[{value, marked}]]}, rows bottom to top; a concatenated
// tableau exports {left, right}.
std::string to_json_string(const StandardYoungTableau& t);
std::string to_json_string(const SignedShiftedTableau& s);
std::string to_json_string(const ConcatTableau& st);

// Letters of a tableau in increasing order.
std::vector<int> letters(const SignedShiftedTableau& s);

}  // namespace qdeg
