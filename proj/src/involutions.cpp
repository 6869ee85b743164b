#include "qdeg/involutions.hpp"

#include <algorithm>
#include <array>

namespace qdeg {

int diagonal_value(const Cell& cell, bool marked) {
  return marked ? cell.col - cell.row : cell.row - cell.col;
}

namespace {

struct Loc {
  int row = 0;  // 1-indexed
  int idx = 0;  // index within the row; cell is (row, row + idx)
};

Loc find_value(const SignedShiftedTableau& s, int value) {
  for (size_t r = 0; r < s.rows.size(); ++r)
    for (size_t j = 0; j < s.rows[r].size(); ++j)
      if (s.rows[r][j].value == value) return {static_cast<int>(r) + 1, static_cast<int>(j)};
  throw std::invalid_argument("involution: letter " + std::to_string(value) + " not present");
}

Entry& at(SignedShiftedTableau& s, const Loc& loc) { return s.rows[loc.row - 1][loc.idx]; }
const Entry& at(const SignedShiftedTableau& s, const Loc& loc) {
  return s.rows[loc.row - 1][loc.idx];
}

Cell cell_of(const Loc& loc) { return {loc.row, loc.row + loc.idx}; }

struct Triple {
  std::array<Loc, 3> loc;    // letters i-1, i, i+1
  std::array<int, 3> diag;   // their diagonal values
  std::array<int, 3> sorted; // diag values sorted: a <= b <= c
};

Triple gather(const SignedShiftedTableau& s, int i) {
  Triple t;
  for (int k = 0; k < 3; ++k) {
    t.loc[k] = find_value(s, i - 1 + k);
    t.diag[k] = diagonal_value(cell_of(t.loc[k]), at(s, t.loc[k]).marked);
  }
  t.sorted = t.diag;
  std::sort(t.sorted.begin(), t.sorted.end());
  return t;
}

// Index within the triple of the unique letter on the given diagonal,
// excluding `skip` (-1 for none). Ties outside case (2) cannot occur.
int on_diagonal(const Triple& t, int d, int skip = -1) {
  for (int k = 0; k < 3; ++k)
    if (k != skip && t.diag[k] == d) return k;
  throw InvariantError("involution: no letter on the requested diagonal");
}

int classify(const Triple& t) {
  auto [a, b, c] = t.sorted;
  if (t.diag[1] == b && a != b && b != c) return 1;
  if (a == b || b == c) return 2;
  if (std::abs(std::abs(a) - std::abs(c)) == 1) return 3;
  return 4;
}

void check_index_range(int i, int n) {
  if (i <= 1 || i >= n)
    throw std::invalid_argument("involution: index must satisfy 1 < i < n");
}

void revalidate(const SignedShiftedTableau& s, bool contiguous) {
  try {
    validate(s, contiguous);
  } catch (const ParseError& e) {
    throw InvariantError(std::string("involution produced an invalid tableau: ") + e.what());
  }
}

SignedShiftedTableau deg_sst_impl(const SignedShiftedTableau& s, int i, bool contiguous) {
  Triple t = gather(s, i);
  auto [a, b, c] = t.sorted;
  SignedShiftedTableau out = s;
  switch (classify(t)) {
    case 1:
      return out;
    case 2: {
      // the tied pair is i-1, i+1; toggle the lone letter opposite it
      int target = (a == b) ? on_diagonal(t, c) : on_diagonal(t, a);
      at(out, t.loc[target]).marked = !at(out, t.loc[target]).marked;
      break;
    }
    case 3: {
      int ka = on_diagonal(t, a);
      int kc = on_diagonal(t, c);
      at(out, t.loc[ka]).marked = !at(out, t.loc[ka]).marked;
      at(out, t.loc[kc]).marked = !at(out, t.loc[kc]).marked;
      break;
    }
    case 4: {
      int ka = on_diagonal(t, a);
      int kc = on_diagonal(t, c);
      std::swap(at(out, t.loc[ka]).value, at(out, t.loc[kc]).value);
      break;
    }
  }
  revalidate(out, contiguous);
  return out;
}

// Positions (1-indexed) of values v-1, v, v+1 in a word.
std::array<int, 3> triple_positions(const Word& w, int v) {
  std::array<int, 3> pos{0, 0, 0};
  for (size_t p = 0; p < w.size(); ++p)
    for (int k = 0; k < 3; ++k)
      if (w[p] == v - 1 + k) pos[k] = static_cast<int>(p) + 1;
  for (int k = 0; k < 3; ++k)
    if (pos[k] == 0)
      throw std::invalid_argument("involution: letter " + std::to_string(v - 1 + k) +
                                  " not present");
  return pos;
}

bool middle_is(const std::array<int, 3>& pos, int k) {
  int lo = std::min({pos[0], pos[1], pos[2]});
  int hi = std::max({pos[0], pos[1], pos[2]});
  return pos[k] != lo && pos[k] != hi;
}

// The two letters of {v-1, v, v+1} at the extreme positions.
std::pair<int, int> extreme_values(const std::array<int, 3>& pos, int v) {
  int lo = 0, hi = 0;
  for (int k = 0; k < 3; ++k) {
    if (pos[k] < pos[lo]) lo = k;
    if (pos[k] > pos[hi]) hi = k;
  }
  return {v - 1 + lo, v - 1 + hi};
}

}  // namespace

StandardYoungTableau deg_syt(const StandardYoungTableau& t, int i) {
  check_index_range(i, t.shape.size());
  Word w = row_reading_word(t);
  auto pos = triple_positions(w, i);
  if (middle_is(pos, 1)) return t;
  auto [u, v] = extreme_values(pos, i);
  StandardYoungTableau out = t;
  for (auto& row : out.rows)
    for (int& x : row) {
      if (x == u)
        x = v;
      else if (x == v)
        x = u;
    }
  try {
    validate(out);
  } catch (const ParseError& e) {
    throw InvariantError(std::string("involution produced an invalid tableau: ") + e.what());
  }
  return out;
}

int deg_sst_case(const SignedShiftedTableau& s, int i) { return classify(gather(s, i)); }

SignedShiftedTableau deg_sst(const SignedShiftedTableau& s, int i) {
  check_index_range(i, s.shape.size());
  return deg_sst_impl(s, i, true);
}

SignedShiftedTableau queer_sst(const SignedShiftedTableau& s) {
  if (s.shape.size() < 2)
    throw std::invalid_argument("queer involution: tableau must have at least 2 letters");
  Loc loc = find_value(s, 2);
  SignedShiftedTableau out = s;
  at(out, loc).marked = !at(out, loc).marked;
  revalidate(out, true);
  return out;
}

namespace {

SignedShiftedTableau queer_factor(const SignedShiftedTableau& s) {
  Loc loc = find_value(s, 2);
  SignedShiftedTableau out = s;
  at(out, loc).marked = !at(out, loc).marked;
  revalidate(out, false);
  return out;
}

bool has_value(const SignedShiftedTableau& s, int v) {
  for (const auto& row : s.rows)
    for (const Entry& e : row)
      if (e.value == v) return true;
  return false;
}

}  // namespace

ConcatTableau deg_concat(const ConcatTableau& st, int i) {
  int n = st.left.shape.size() + st.right.shape.size();
  check_index_range(i, n);
  Word w = hook_reading_word(st.left);
  Word r = hook_reading_word(st.right);
  int left_len = static_cast<int>(w.size());
  w.insert(w.end(), r.begin(), r.end());
  auto pos = triple_positions(w, i);
  if (middle_is(pos, 1)) return st;

  auto in_left = [&](int k) { return pos[k] <= left_len; };
  bool all_left = in_left(0) && in_left(1) && in_left(2);
  bool all_right = !in_left(0) && !in_left(1) && !in_left(2);
  ConcatTableau out = st;
  if (all_left) {
    out.left = deg_sst_impl(st.left, i, false);
  } else if (all_right) {
    out.right = deg_sst_impl(st.right, i, false);
  } else {
    auto [u, v] = extreme_values(pos, i);
    for (auto* side : {&out.left, &out.right})
      for (auto& row : side->rows)
        for (Entry& e : row) {
          if (e.value == u)
            e.value = v;
          else if (e.value == v)
            e.value = u;
        }
  }
  try {
    validate(out);
  } catch (const ParseError& e) {
    throw InvariantError(std::string("involution produced an invalid tableau: ") + e.what());
  }
  return out;
}

ConcatTableau queer_concat(const ConcatTableau& st) {
  int n = st.left.shape.size() + st.right.shape.size();
  if (n < 2)
    throw std::invalid_argument("queer involution: tableau must have at least 2 letters");
  bool one_left = has_value(st.left, 1);
  bool two_left = has_value(st.left, 2);
  ConcatTableau out = st;
  if (one_left == two_left) {
    if (one_left)
      out.left = queer_factor(st.left);
    else
      out.right = queer_factor(st.right);
  } else {
    // 1 and 2 head different factors; both sit at their factor's origin
    // cell, so neither can be marked, and the swap is mark-free.
    auto& one_side = one_left ? out.left : out.right;
    auto& two_side = two_left ? out.left : out.right;
    Entry& e1 = one_side.rows[0][0];
    Entry& e2 = two_side.rows[0][0];
    if (e1.value != 1 || e2.value != 2 || e1.marked || e2.marked)
      throw InvariantError("queer involution: 1 and 2 must head their factors unmarked");
    e1.value = 2;
    e2.value = 1;
  }
  try {
    validate(out);
  } catch (const ParseError& e) {
    throw InvariantError(std::string("involution produced an invalid tableau: ") + e.what());
  }
  return out;
}

}  // namespace qdeg
