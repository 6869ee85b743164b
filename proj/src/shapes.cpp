#include "qdeg/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qdeg {

namespace {

bool weakly_decreasing(const std::vector<int>& p) {
  for (size_t k = 0; k + 1 < p.size(); ++k)
    if (p[k] < p[k + 1]) return false;
  return p.empty() || p.back() > 0;
}

bool strictly_decreasing(const std::vector<int>& p) {
  for (size_t k = 0; k + 1 < p.size(); ++k)
    if (p[k] <= p[k + 1]) return false;
  return p.empty() || p.back() > 0;
}

int sum(const std::vector<int>& p) { return std::accumulate(p.begin(), p.end(), 0); }

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!weakly_decreasing(parts_))
    throw std::invalid_argument("Partition: parts must be weakly decreasing and positive");
}

int Partition::size() const { return sum(parts_); }
std::string Partition::str() const { return format_parts(parts_); }
Partition Partition::parse(std::string_view text) { return Partition(parse_parts(text)); }

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!strictly_decreasing(parts_))
    throw std::invalid_argument("StrictPartition: parts must be strictly decreasing and positive");
}

int StrictPartition::size() const { return sum(parts_); }
std::string StrictPartition::str() const { return format_parts(parts_); }
StrictPartition StrictPartition::parse(std::string_view text) {
  return StrictPartition(parse_parts(text));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  for (int c = 1; lambda.length() > 0 && c <= lambda.parts()[0]; ++c) {
    int count = 0;
    for (int p : lambda.parts())
      if (p >= c) ++count;
    out.push_back(count);
  }
  return Partition(out);
}

namespace {

template <class Emit>
void emit_partitions(int remaining, int max_part, bool strict, std::vector<int>& acc, Emit&& emit) {
  if (remaining == 0) {
    emit(acc);
    return;
  }
  for (int first = std::min(remaining, max_part); first >= 1; --first) {
    acc.push_back(first);
    emit_partitions(remaining - first, strict ? first - 1 : first, strict, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of: n must be at least 1");
  std::vector<Partition> out;
  std::vector<int> acc;
  emit_partitions(n, n, false, acc, [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

std::vector<StrictPartition> strict_partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("strict_partitions_of: n must be at least 1");
  std::vector<StrictPartition> out;
  std::vector<int> acc;
  emit_partitions(n, n, true, acc, [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

std::vector<Cell> shifted_diagram(const StrictPartition& gamma) {
  std::vector<Cell> cells;
  for (int r = 1; r <= gamma.length(); ++r)
    for (int c = r; c <= r + gamma.part(r) - 1; ++c) cells.push_back({r, c});
  std::sort(cells.begin(), cells.end());
  return cells;
}

Partition sym_diagram(const StrictPartition& gamma) {
  std::vector<int> out;
  int ell = gamma.length();
  for (int i = 1; i <= ell; ++i) out.push_back(gamma.part(i) + i - 1);
  for (int i = ell + 1;; ++i) {
    int count = 0;
    for (int j = 1; j <= ell; ++j)
      if (gamma.part(j) + j - 1 >= i) ++count;
    if (count == 0) break;
    out.push_back(count);
  }
  return Partition(out);
}

namespace {

bool valid_parts(std::vector<int> parts, bool strict) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (int p : parts)
    if (p <= 0) return false;
  for (size_t k = 0; k + 1 < parts.size(); ++k) {
    if (strict ? parts[k] <= parts[k + 1] : parts[k] < parts[k + 1]) return false;
  }
  return true;
}

BoundaryCells boundary_exhaustive(const std::vector<int>& parts, bool strict) {
  BoundaryCells out;
  int ell = static_cast<int>(parts.size());
  auto row_end_col = [&](int r, int len) { return strict ? r + len - 1 : len; };
  for (int r = 1; r <= ell + 1; ++r) {
    std::vector<int> grown = parts;
    if (r <= ell)
      ++grown[r - 1];
    else
      grown.push_back(1);
    if (valid_parts(grown, strict))
      out.addable.push_back({r, row_end_col(r, r <= ell ? parts[r - 1] + 1 : 1)});
  }
  for (int r = 1; r <= ell; ++r) {
    std::vector<int> shrunk = parts;
    --shrunk[r - 1];
    if (valid_parts(shrunk, strict)) out.removable.push_back({r, row_end_col(r, parts[r - 1])});
  }
  std::sort(out.addable.begin(), out.addable.end());
  std::sort(out.removable.begin(), out.removable.end());
  return out;
}

}  // namespace

BoundaryCells boundary_cells(const Partition& lambda) {
  return boundary_exhaustive(lambda.parts(), false);
}

BoundaryCells boundary_cells(const StrictPartition& gamma) {
  return boundary_exhaustive(gamma.parts(), true);
}

std::string format_parts(const std::vector<int>& parts) {
  std::string out;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts[k]);
  }
  return out;
}

std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                            : comma - pos);
    if (tok.empty()) throw std::invalid_argument("shape: empty part in \"" + std::string(text) + "\"");
    int value = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("shape: non-numeric part in \"" + std::string(text) + "\"");
      value = value * 10 + (ch - '0');
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return parts;
}

}  // namespace qdeg
