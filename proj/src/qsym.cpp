#include "qdeg/qsym.hpp"

#include <algorithm>
#include <set>

namespace qdeg {

long long QSymF::coeff_of(const DescentSet& d) const {
  auto it = coeff_.find(d.mask());
  return it == coeff_.end() ? 0 : it->second;
}

void QSymF::add_term(const DescentSet& d, long long c) {
  if (d.degree() != degree_)
    throw std::invalid_argument("QSymF: descent-set degree mismatch");
  auto it = coeff_.try_emplace(d.mask(), 0).first;
  it->second += c;
  if (it->second == 0) coeff_.erase(it);
}

QSymF& QSymF::operator+=(const QSymF& o) {
  if (degree_ != o.degree_ && !o.is_zero() && !is_zero())
    throw std::invalid_argument("QSymF: degree mismatch");
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [mask, c] : o.coeff_) add_term(DescentSet::from_mask(degree_, mask), c);
  return *this;
}

QSymF& QSymF::operator-=(const QSymF& o) {
  if (degree_ != o.degree_ && !o.is_zero() && !is_zero())
    throw std::invalid_argument("QSymF: degree mismatch");
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [mask, c] : o.coeff_) add_term(DescentSet::from_mask(degree_, mask), -c);
  return *this;
}

QSymF& QSymF::operator*=(long long c) {
  if (c == 0) {
    coeff_.clear();
    return *this;
  }
  for (auto& [mask, v] : coeff_) v *= c;
  return *this;
}

std::string QSymF::str() const {
  if (coeff_.empty()) return "0";
  std::vector<std::pair<std::vector<int>, long long>> terms;
  for (const auto& [mask, c] : coeff_)
    terms.push_back({DescentSet::from_mask(degree_, mask).members(), c});
  std::sort(terms.begin(), terms.end());
  std::string out;
  bool first = true;
  for (const auto& [members, c] : terms) {
    long long mag = c < 0 ? -c : c;
    if (first)
      out += c < 0 ? "- " : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (mag != 1) out += std::to_string(mag) + " ";
    out += "F{" + format_parts(members) + "}";
  }
  return out;
}

QSymF from_descent_multiset(int degree, const std::map<DescentSet, int>& multiset) {
  QSymF f(degree);
  for (const auto& [d, mult] : multiset) f.add_term(d, mult);
  return f;
}

QSymF schur_F(const Partition& lambda) {
  QSymF f(lambda.size());
  for (const auto& t : generate_syt(lambda)) f.add_term(descent_set(t), 1);
  return f;
}

QSymF schurP_F(const StrictPartition& gamma) {
  QSymF f(gamma.size());
  for (const auto& s : generate_sst(gamma)) f.add_term(descent_set(s), 1);
  return f;
}

QSymF schurQ_F(const StrictPartition& gamma) {
  QSymF f = schurP_F(gamma);
  f *= 1LL << gamma.length();
  return f;
}

bool BasisExpansion::all_nonnegative() const {
  for (const auto& [shape, c] : coeff)
    if (c < 0) return false;
  return true;
}

namespace {

std::vector<std::pair<std::vector<int>, QSymF>> basis_table(int degree, Basis basis) {
  std::vector<std::pair<std::vector<int>, QSymF>> out;
  if (basis == Basis::schur) {
    for (const auto& lambda : partitions_of(degree)) out.push_back({lambda.parts(), schur_F(lambda)});
  } else {
    for (const auto& gamma : strict_partitions_of(degree))
      out.push_back({gamma.parts(), schurP_F(gamma)});
  }
  return out;
}

}  // namespace

BasisExpansion decompose(const QSymF& f, Basis basis) {
  BasisExpansion out{basis, {}};
  if (f.is_zero()) return out;
  auto table = basis_table(f.degree(), basis);

  // row space: every descent mask seen in the basis or in f
  std::set<uint32_t> masks;
  for (const auto& [shape, q] : table)
    for (const auto& [mask, c] : q.coeff()) masks.insert(mask);
  for (const auto& [mask, c] : f.coeff()) masks.insert(mask);

  std::vector<uint32_t> mask_list(masks.begin(), masks.end());
  size_t rows = mask_list.size(), cols = table.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (size_t r = 0; r < rows; ++r) {
    DescentSet d = DescentSet::from_mask(f.degree(), mask_list[r]);
    for (size_t c = 0; c < cols; ++c) m[r][c] = table[c].second.coeff_of(d);
    m[r][cols] = f.coeff_of(d);
  }

  // exact Gaussian elimination
  std::vector<int> pivot_row_of_col(cols, -1);
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    Rational inv = Rational(1) / m[rank][c];
    for (auto& x : m[rank]) x *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Rational factor = m[r][c];
      for (size_t k = c; k <= cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    pivot_row_of_col[c] = static_cast<int>(rank);
    ++rank;
  }
  for (size_t r = rank; r < rows; ++r)
    if (!m[r][cols].is_zero())
      throw NotInSpanError("decompose: not in the span of the " + basis_name(basis) + " basis");
  for (size_t c = 0; c < cols; ++c) {
    Rational x = pivot_row_of_col[c] < 0 ? Rational(0) : m[pivot_row_of_col[c]][cols];
    if (pivot_row_of_col[c] < 0)
      throw NotInSpanError("decompose: basis unexpectedly dependent");  // cannot happen
    if (!x.is_integer())
      throw NotInSpanError("decompose: no integral combination in the " + basis_name(basis) +
                           " basis");
    if (!x.is_zero()) out.coeff[table[c].first] = x.num();
  }
  return out;
}

Word word_with_descent_positions(const DescentSet& positions, int offset) {
  int len = positions.degree();
  // split 1..len into runs at the descent positions; later runs take
  // smaller value blocks, each run ascending
  std::vector<std::vector<int>> runs(1);
  for (int j = 1; j <= len; ++j) {
    runs.back().push_back(j);
    if (j < len && positions.contains(j)) runs.emplace_back();
  }
  Word w(len);
  int next = offset + 1;
  for (auto run = runs.rbegin(); run != runs.rend(); ++run)
    for (int pos : *run) w[pos - 1] = next++;
  return w;
}

namespace {

void shuffle_words(const Word& a, const Word& b, size_t ia, size_t ib, Word& acc, QSymF& out) {
  if (ia == a.size() && ib == b.size()) {
    out.add_term(word_descent_positions(acc), 1);
    return;
  }
  if (ia < a.size()) {
    acc.push_back(a[ia]);
    shuffle_words(a, b, ia + 1, ib, acc, out);
    acc.pop_back();
  }
  if (ib < b.size()) {
    acc.push_back(b[ib]);
    shuffle_words(a, b, ia, ib + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

QSymF shuffle_product(const DescentSet& a, const DescentSet& b) {
  if (a.degree() == 0 || b.degree() == 0) {
    const DescentSet& keep = a.degree() == 0 ? b : a;
    QSymF out(keep.degree());
    out.add_term(keep, 1);
    return out;
  }
  Word alpha = word_with_descent_positions(a, 0);
  Word beta = word_with_descent_positions(b, a.degree());
  QSymF out(a.degree() + b.degree());
  Word acc;
  shuffle_words(alpha, beta, 0, 0, acc, out);
  return out;
}

QSymF shuffle_product(const QSymF& f, const QSymF& g) {
  QSymF out(f.degree() + g.degree());
  for (const auto& [ma, ca] : f.coeff())
    for (const auto& [mb, cb] : g.coeff()) {
      QSymF term = shuffle_product(DescentSet::from_mask(f.degree(), ma),
                                   DescentSet::from_mask(g.degree(), mb));
      term *= ca * cb;
      out += term;
    }
  return out;
}

Rational evaluate(const QSymF& f, const std::vector<Rational>& point) {
  int m = static_cast<int>(point.size());
  if (m < 1) throw std::invalid_argument("evaluate: need at least one variable");
  int n = f.degree();
  Rational total(0);
  if (n == 0) {
    for (const auto& [mask, c] : f.coeff()) total += Rational(c);
    return total;
  }
  for (const auto& [mask, c] : f.coeff()) {
    DescentSet d = DescentSet::from_mask(n, mask);
    // dp[v]: weighted count of admissible prefixes ending at variable v+1
    std::vector<Rational> dp(m, Rational(0));
    for (int v = 0; v < m; ++v) dp[v] = point[v];
    for (int j = 2; j <= n; ++j) {
      bool strict = d.contains(j - 1);
      std::vector<Rational> next(m, Rational(0));
      Rational prefix(0);
      for (int v = 0; v < m; ++v) {
        if (!strict) prefix += dp[v];
        next[v] = prefix * point[v];
        if (strict) prefix += dp[v];
      }
      dp = std::move(next);
    }
    Rational sum(0);
    for (int v = 0; v < m; ++v) sum += dp[v];
    total += sum * Rational(c);
  }
  return total;
}

std::string to_csv(const BasisExpansion& e) {
  std::string out = "shape,coefficient\n";
  for (const auto& [shape, c] : e.coeff)
    out += "\"" + format_parts(shape) + "\"," + std::to_string(c) + "\n";
  return out;
}

std::string basis_name(Basis b) { return b == Basis::schur ? "schur" : "schurP"; }

}  // namespace qdeg
