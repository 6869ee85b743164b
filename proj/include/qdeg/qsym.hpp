#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdeg/rational.hpp"
#include "qdeg/shapes.hpp"
#include "qdeg/tableaux.hpp"

namespace qdeg {

// Thrown by decompose when the input is not an integer combination of the
// requested basis.
struct NotInSpanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Homogeneous integer combination of fundamental quasisymmetric functions
// of one degree, keyed by descent-set bitmask. Zero coefficients absent.
class QSymF {
 public:
  QSymF() = default;
  explicit QSymF(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<uint32_t, long long>& coeff() const { return coeff_; }
  bool is_zero() const { return coeff_.empty(); }
  long long coeff_of(const DescentSet& d) const;

  void add_term(const DescentSet& d, long long c);
  QSymF& operator+=(const QSymF& o);
  QSymF& operator-=(const QSymF& o);
  QSymF& operator*=(long long c);
  friend QSymF operator+(QSymF a, const QSymF& b) { return a += b; }
  friend QSymF operator-(QSymF a, const QSymF& b) { return a -= b; }
  friend QSymF operator*(QSymF a, long long c) { return a *= c; }
  friend bool operator==(const QSymF&, const QSymF&) = default;

  // Terms like "F{1} + 2 F{2,3}", keys in lexicographic order.
  std::string str() const;

 private:
  int degree_ = 0;
  std::map<uint32_t, long long> coeff_;
};

QSymF from_descent_multiset(int degree, const std::map<DescentSet, int>& multiset);

// Sum of F over the descent sets of a tableau family.
QSymF schur_F(const Partition& lambda);
QSymF schurP_F(const StrictPartition& gamma);
// 2^length(gamma) times schurP_F(gamma).
QSymF schurQ_F(const StrictPartition& gamma);

enum class Basis { schur, schur_p };

struct BasisExpansion {
  Basis basis = Basis::schur;
  std::map<std::vector<int>, long long> coeff;  // shape parts -> coefficient
  bool all_nonnegative() const;
  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

// The unique integer combination of basis elements equal to f, by exact
// rational elimination over F-coefficient vectors. Throws NotInSpanError
// when no integral combination exists.
BasisExpansion decompose(const QSymF& f, Basis basis);

// F_A F_B as a sum of F over shuffles of representative words, using
// ordinary word descents (positions j with w_j > w_{j+1}) of the shuffled
// words. Independent of the chosen representatives.
QSymF shuffle_product(const DescentSet& a, const DescentSet& b);
// Bilinear extension.
QSymF shuffle_product(const QSymF& f, const QSymF& g);

// Word on letters offset+1..offset+len whose ordinary word descents are
// exactly the given positions.
Word word_with_descent_positions(const DescentSet& positions, int offset);

// Substitute x_1..x_m = point, all later variables 0.
Rational evaluate(const QSymF& f, const std::vector<Rational>& point);

// CSV rows "shape,coefficient" with quoted shapes.
std::string to_csv(const BasisExpansion& e);

std::string basis_name(Basis b);

}  // namespace qdeg
