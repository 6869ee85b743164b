#include "qdeg/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace qdeg {

// --- DescentSet ---

DescentSet::DescentSet(int degree, std::initializer_list<int> members) : degree_(degree) {
  for (int i : members) {
    if (i < 1 || i >= degree) throw std::invalid_argument("DescentSet: member out of [1, n-1]");
    mask_ |= 1u << (i - 1);
  }
}

DescentSet DescentSet::from_mask(int degree, uint32_t mask) {
  bool ok = degree >= 0 && degree <= 32 &&
            (degree <= 1 ? mask == 0 : degree == 32 || (mask >> (degree - 1)) == 0);
  if (!ok) throw std::invalid_argument("DescentSet: mask out of range for degree");
  DescentSet d;
  d.degree_ = degree;
  d.mask_ = mask;
  return d;
}

DescentSet DescentSet::from_members(int degree, const std::vector<int>& members) {
  DescentSet d;
  d.degree_ = degree;
  for (int i : members) {
    if (i < 1 || i >= degree) throw std::invalid_argument("DescentSet: member out of [1, n-1]");
    d.mask_ |= 1u << (i - 1);
  }
  return d;
}

std::vector<int> DescentSet::members() const {
  std::vector<int> out;
  for (int i = 1; i < degree_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string DescentSet::str() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(i);
  }
  return out + "}";
}

DescentSet DescentSet::restricted(int h, int i) const {
  if (h < 1 || h > i || i > degree_)
    throw std::invalid_argument("restrict_descents: need 1 <= h <= i <= degree");
  DescentSet out;
  out.degree_ = i - h + 1;
  for (int d = h; d < i; ++d)
    if (contains(d)) out.mask_ |= 1u << (d - h);
  return out;
}

// --- reading words ---

Word row_reading_word(const StandardYoungTableau& t) {
  Word w;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

Word hook_reading_word(const SignedShiftedTableau& s) {
  Word w;
  int max_col = 0;
  for (int r = 1; r <= s.shape.length(); ++r)
    max_col = std::max(max_col, r + s.shape.part(r) - 1);
  for (int i = max_col; i >= 1; --i) {
    // marked entries of column i, bottom to top
    for (int r = 1; r <= s.shape.length(); ++r) {
      int j = i - r;
      if (j < 0 || j >= s.shape.part(r)) continue;
      const Entry& e = s.rows[r - 1][j];
      if (e.marked) w.push_back(e.value);
    }
    // unmarked entries of row i, left to right
    if (i <= s.shape.length()) {
      for (const Entry& e : s.rows[i - 1])
        if (!e.marked) w.push_back(e.value);
    }
  }
  return w;
}

DescentSet descent_set(const Word& w) {
  int n = static_cast<int>(w.size());
  std::vector<int> pos(n + 1, 0);
  for (int p = 0; p < n; ++p) {
    int v = w[p];
    if (v < 1 || v > n || pos[v] != 0)
      throw std::invalid_argument("descent_set: word is not a permutation of 1..n");
    pos[v] = p + 1;
  }
  std::vector<int> members;
  for (int i = 1; i < n; ++i)
    if (pos[i] > pos[i + 1]) members.push_back(i);
  return DescentSet::from_members(n, members);
}

DescentSet descent_set(const StandardYoungTableau& t) { return descent_set(row_reading_word(t)); }
DescentSet descent_set(const SignedShiftedTableau& s) { return descent_set(hook_reading_word(s)); }

DescentSet descent_set(const ConcatTableau& st) {
  Word w = hook_reading_word(st.left);
  Word r = hook_reading_word(st.right);
  w.insert(w.end(), r.begin(), r.end());
  return descent_set(w);
}

DescentSet word_descent_positions(const Word& w) {
  int n = static_cast<int>(w.size());
  std::vector<int> members;
  for (int j = 1; j < n; ++j)
    if (w[j - 1] > w[j]) members.push_back(j);
  return DescentSet::from_members(n, members);
}

// --- validation ---

void validate(const StandardYoungTableau& t) {
  const auto& parts = t.shape.parts();
  if (t.rows.size() != parts.size())
    throw ParseError("tableau: row count does not match the shape");
  int n = t.shape.size();
  std::set<int> seen;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    if (static_cast<int>(t.rows[r].size()) != parts[r])
      throw ParseError("tableau: row length does not match the shape");
    for (size_t j = 0; j < t.rows[r].size(); ++j) {
      int v = t.rows[r][j];
      if (v < 1 || v > n || !seen.insert(v).second)
        throw ParseError("tableau: filling must be a bijection with 1..n");
      if (j > 0 && t.rows[r][j - 1] >= v)
        throw ParseError("tableau: values must increase along rows");
      if (r > 0 && j < t.rows[r - 1].size() && t.rows[r - 1][j] >= v)
        throw ParseError("tableau: values must increase up columns");
    }
  }
}

void validate(const SignedShiftedTableau& s, bool require_contiguous_letters) {
  const auto& parts = s.shape.parts();
  if (s.rows.size() != parts.size())
    throw ParseError("tableau: row count does not match the shape");
  std::set<int> seen;
  for (size_t r0 = 0; r0 < s.rows.size(); ++r0) {
    if (static_cast<int>(s.rows[r0].size()) != parts[r0])
      throw ParseError("tableau: row length does not match the shape");
    for (size_t j = 0; j < s.rows[r0].size(); ++j) {
      const Entry& e = s.rows[r0][j];
      if (e.value < 1) throw ParseError("tableau: letters must be positive");
      if (!seen.insert(e.value).second) throw ParseError("tableau: duplicate absolute value");
      if (e.marked && j == 0) throw ParseError("tableau: marked entry on the main diagonal");
      if (j > 0 && s.rows[r0][j - 1].value >= e.value)
        throw ParseError("tableau: absolute values must increase along rows");
      // cell above (r, r+j) is (r+1, r+j), index j-1 in row r+1
      if (r0 + 1 < s.rows.size() && j >= 1 && j - 1 < s.rows[r0 + 1].size() &&
          e.value >= s.rows[r0 + 1][j - 1].value)
        throw ParseError("tableau: absolute values must increase up columns");
    }
  }
  if (require_contiguous_letters) {
    int n = s.shape.size();
    if (!seen.empty() && (*seen.begin() != 1 || *seen.rbegin() != n))
      throw ParseError("tableau: letters must be exactly 1..n");
  }
}

void validate(const ConcatTableau& st) {
  validate(st.left, false);
  validate(st.right, false);
  std::set<int> all;
  for (int v : letters(st.left)) all.insert(v);
  for (int v : letters(st.right))
    if (!all.insert(v).second) throw ParseError("tableau: duplicate absolute value across factors");
  int n = st.left.shape.size() + st.right.shape.size();
  if (!all.empty() && (*all.begin() != 1 || *all.rbegin() != n || static_cast<int>(all.size()) != n))
    throw ParseError("tableau: letters must be exactly 1..n");
}

std::vector<int> letters(const SignedShiftedTableau& s) {
  std::vector<int> out;
  for (const auto& row : s.rows)
    for (const Entry& e : row) out.push_back(e.value);
  std::sort(out.begin(), out.end());
  return out;
}

// --- enumeration ---

namespace {

// Fill values n down to 1 into removable-corner positions; marks branch
// off the main diagonal.
void fill_sst(std::vector<int>& cur, std::vector<std::vector<Entry>>& grid, int value,
              const StrictPartition& shape, std::vector<SignedShiftedTableau>& out) {
  if (value == 0) {
    out.push_back({shape, grid});
    return;
  }
  std::vector<int> nonzero(cur.begin(), cur.end());
  while (!nonzero.empty() && nonzero.back() == 0) nonzero.pop_back();
  for (const Cell& c : boundary_cells(StrictPartition(nonzero)).removable) {
    --cur[c.row - 1];
    grid[c.row - 1][c.col - c.row] = {value, false};
    fill_sst(cur, grid, value - 1, shape, out);
    if (c.col != c.row) {
      grid[c.row - 1][c.col - c.row] = {value, true};
      fill_sst(cur, grid, value - 1, shape, out);
    }
    ++cur[c.row - 1];
  }
}

void fill_syt(std::vector<int>& cur, std::vector<std::vector<int>>& grid, int value,
              const Partition& shape, std::vector<StandardYoungTableau>& out) {
  if (value == 0) {
    out.push_back({shape, grid});
    return;
  }
  std::vector<int> nonzero(cur.begin(), cur.end());
  while (!nonzero.empty() && nonzero.back() == 0) nonzero.pop_back();
  for (const Cell& c : boundary_cells(Partition(nonzero)).removable) {
    --cur[c.row - 1];
    grid[c.row - 1][c.col - 1] = value;
    fill_syt(cur, grid, value - 1, shape, out);
    ++cur[c.row - 1];
  }
}

void fill_tensor(std::vector<int>& curL, std::vector<int>& curR,
                 std::vector<std::vector<Entry>>& gridL, std::vector<std::vector<Entry>>& gridR,
                 int value, const StrictPartition& gamma, const StrictPartition& delta,
                 std::vector<ConcatTableau>& out) {
  if (value == 0) {
    out.push_back({{gamma, gridL}, {delta, gridR}});
    return;
  }
  auto corners = [](const std::vector<int>& cur) {
    std::vector<int> nonzero(cur.begin(), cur.end());
    while (!nonzero.empty() && nonzero.back() == 0) nonzero.pop_back();
    if (nonzero.empty()) return std::vector<Cell>{};
    return boundary_cells(StrictPartition(nonzero)).removable;
  };
  for (const Cell& c : corners(curL)) {
    --curL[c.row - 1];
    for (bool marked : {false, true}) {
      if (marked && c.col == c.row) continue;
      gridL[c.row - 1][c.col - c.row] = {value, marked};
      fill_tensor(curL, curR, gridL, gridR, value - 1, gamma, delta, out);
    }
    ++curL[c.row - 1];
  }
  for (const Cell& c : corners(curR)) {
    --curR[c.row - 1];
    for (bool marked : {false, true}) {
      if (marked && c.col == c.row) continue;
      gridR[c.row - 1][c.col - c.row] = {value, marked};
      fill_tensor(curL, curR, gridL, gridR, value - 1, gamma, delta, out);
    }
    ++curR[c.row - 1];
  }
}

std::vector<std::vector<Entry>> entry_grid(const StrictPartition& shape) {
  std::vector<std::vector<Entry>> grid;
  for (int r = 1; r <= shape.length(); ++r)
    grid.emplace_back(shape.part(r));
  return grid;
}

}  // namespace

std::vector<StandardYoungTableau> generate_syt(const Partition& lambda) {
  std::vector<StandardYoungTableau> out;
  if (lambda.empty()) {
    out.push_back({lambda, {}});
    return out;
  }
  std::vector<std::vector<int>> grid;
  for (int r = 1; r <= lambda.length(); ++r) grid.emplace_back(lambda.part(r));
  std::vector<int> cur = lambda.parts();
  fill_syt(cur, grid, lambda.size(), lambda, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return format(a) < format(b); });
  return out;
}

std::vector<SignedShiftedTableau> generate_sst(const StrictPartition& gamma) {
  std::vector<SignedShiftedTableau> out;
  if (gamma.empty()) {
    out.push_back({gamma, {}});
    return out;
  }
  auto grid = entry_grid(gamma);
  std::vector<int> cur = gamma.parts();
  fill_sst(cur, grid, gamma.size(), gamma, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return format(a) < format(b); });
  return out;
}

std::vector<ConcatTableau> generate_tensor(const StrictPartition& gamma,
                                           const StrictPartition& delta) {
  std::vector<ConcatTableau> out;
  int n = gamma.size() + delta.size();
  if (n == 0) {
    out.push_back({{gamma, {}}, {delta, {}}});
    return out;
  }
  auto gridL = entry_grid(gamma);
  auto gridR = entry_grid(delta);
  std::vector<int> curL = gamma.parts(), curR = delta.parts();
  fill_tensor(curL, curR, gridL, gridR, n, gamma, delta, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return format(a) < format(b); });
  return out;
}

SignedShiftedTableau superstandard(const StrictPartition& gamma) {
  SignedShiftedTableau s{gamma, entry_grid(gamma)};
  int next = 1;
  for (auto& row : s.rows)
    for (Entry& e : row) e = {next++, false};
  return s;
}

// --- text forms ---

namespace {

std::string format_rows(const std::vector<std::vector<Entry>>& rows) {
  std::string out;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r) out += '/';
    for (size_t j = 0; j < rows[r].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(rows[r][j].value);
      if (rows[r][j].marked) out += '\'';
    }
  }
  return out;
}

std::vector<std::vector<Entry>> parse_rows(std::string_view text) {
  std::vector<std::vector<Entry>> rows;
  size_t pos = 0;
  if (text.empty()) throw ParseError("tableau: empty text");
  while (pos <= text.size()) {
    size_t slash = text.find('/', pos);
    std::string_view row_text =
        text.substr(pos, slash == std::string_view::npos ? text.size() - pos : slash - pos);
    std::vector<Entry> row;
    size_t rpos = 0;
    if (row_text.empty()) throw ParseError("tableau: empty row");
    while (rpos <= row_text.size()) {
      size_t comma = row_text.find(',', rpos);
      std::string_view tok = row_text.substr(
          rpos, comma == std::string_view::npos ? row_text.size() - rpos : comma - rpos);
      if (tok.empty()) throw ParseError("tableau: empty entry");
      Entry e;
      if (tok.back() == '\'') {
        e.marked = true;
        tok.remove_suffix(1);
      }
      if (tok.empty()) throw ParseError("tableau: malformed entry");
      for (char ch : tok) {
        if (ch < '0' || ch > '9') throw ParseError("tableau: malformed entry");
        e.value = e.value * 10 + (ch - '0');
      }
      row.push_back(e);
      if (comma == std::string_view::npos) break;
      rpos = comma + 1;
    }
    rows.push_back(std::move(row));
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
  return rows;
}

std::vector<int> row_lengths(const std::vector<std::vector<Entry>>& rows) {
  std::vector<int> lens;
  for (const auto& row : rows) lens.push_back(static_cast<int>(row.size()));
  return lens;
}

SignedShiftedTableau sst_from_rows(std::vector<std::vector<Entry>> rows, bool contiguous) {
  StrictPartition shape;
  try {
    shape = StrictPartition(row_lengths(rows));
  } catch (const std::invalid_argument&) {
    throw ParseError("tableau: row lengths must form a strict partition");
  }
  SignedShiftedTableau s{shape, std::move(rows)};
  validate(s, contiguous);
  return s;
}

}  // namespace

std::string format(const StandardYoungTableau& t) {
  std::vector<std::vector<Entry>> rows;
  for (const auto& row : t.rows) {
    std::vector<Entry> r;
    for (int v : row) r.push_back({v, false});
    rows.push_back(std::move(r));
  }
  return format_rows(rows);
}

std::string format(const SignedShiftedTableau& s) { return format_rows(s.rows); }

std::string format(const ConcatTableau& st) { return format(st.left) + "|" + format(st.right); }

StandardYoungTableau parse_syt(std::string_view text) {
  auto rows = parse_rows(text);
  std::vector<std::vector<int>> plain;
  for (const auto& row : rows) {
    std::vector<int> r;
    for (const Entry& e : row) {
      if (e.marked) throw ParseError("tableau: marked entry in a standard Young tableau");
      r.push_back(e.value);
    }
    plain.push_back(std::move(r));
  }
  Partition shape;
  try {
    shape = Partition(row_lengths(rows));
  } catch (const std::invalid_argument&) {
    throw ParseError("tableau: row lengths must form a partition");
  }
  StandardYoungTableau t{shape, std::move(plain)};
  validate(t);
  return t;
}

SignedShiftedTableau parse_sst(std::string_view text) {
  return sst_from_rows(parse_rows(text), true);
}

ConcatTableau parse_tensor(std::string_view text) {
  size_t bar = text.find('|');
  if (bar == std::string_view::npos)
    throw ParseError("tableau: concatenated tableau needs a '|' factor separator");
  if (text.find('|', bar + 1) != std::string_view::npos)
    throw ParseError("tableau: more than two factors");
  ConcatTableau st{sst_from_rows(parse_rows(text.substr(0, bar)), false),
                   sst_from_rows(parse_rows(text.substr(bar + 1)), false)};
  validate(st);
  return st;
}

// --- structured export ---

namespace {

nlohmann::json rows_json(const std::vector<std::vector<Entry>>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json jr = nlohmann::json::array();
    for (const Entry& e : row) jr.push_back({{"value", e.value}, {"marked", e.marked}});
    out.push_back(jr);
  }
  return out;
}

nlohmann::json sst_json(const SignedShiftedTableau& s) {
  return {{"shape", s.shape.parts()}, {"rows", rows_json(s.rows)}};
}

}  // namespace

std::string to_json_string(const StandardYoungTableau& t) {
  std::vector<std::vector<Entry>> rows;
  for (const auto& row : t.rows) {
    std::vector<Entry> r;
    for (int v : row) r.push_back({v, false});
    rows.push_back(std::move(r));
  }
  nlohmann::json j{{"shape", t.shape.parts()}, {"rows", rows_json(rows)}};
  return j.dump();
}

std::string to_json_string(const SignedShiftedTableau& s) { return sst_json(s).dump(); }

std::string to_json_string(const ConcatTableau& st) {
  nlohmann::json j{{"left", sst_json(st.left)}, {"right", sst_json(st.right)}};
  return j.dump();
}

}  // namespace qdeg
