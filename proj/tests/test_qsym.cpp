#include "doctest.h"

#include <algorithm>

#include "qdeg/qsym.hpp"

using namespace qdeg;

namespace {

QSymF fq(int degree, std::initializer_list<std::pair<std::vector<int>, long long>> terms) {
  QSymF f(degree);
  for (const auto& [members, c] : terms) f.add_term(DescentSet::from_members(degree, members), c);
  return f;
}

const std::vector<Rational> kPoint = {{1, 2}, {1, 3}, {1, 5}};

}  // namespace

TEST_SUITE("qsym") {

TEST_CASE("Schur functions in the fundamental basis") {
  CHECK(schur_F(Partition({3, 1})) == fq(4, {{{1}, 1}, {{2}, 1}, {{3}, 1}}));
  CHECK(schur_F(Partition({1})) == fq(1, {{{}, 1}}));
  CHECK(schur_F(Partition({2, 1})) == fq(3, {{{1}, 1}, {{2}, 1}}));
}

TEST_CASE("Schur P-functions in the fundamental basis") {
  CHECK(schurP_F(StrictPartition({3, 1})) ==
        fq(4, {{{1}, 1}, {{2}, 2}, {{3}, 1}, {{1, 2}, 1}, {{1, 3}, 2}, {{2, 3}, 1}}));
  CHECK(schurP_F(StrictPartition({2})) == fq(2, {{{}, 1}, {{1}, 1}}));
  CHECK(schurP_F(StrictPartition({1})) == fq(1, {{{}, 1}}));
}

TEST_CASE("Schur Q-functions scale by a power of two") {
  CHECK(schurQ_F(StrictPartition({2})) == fq(2, {{{}, 2}, {{1}, 2}}));
  CHECK(schurQ_F(StrictPartition({1})) == fq(1, {{{}, 2}}));
  QSymF q31 = schurP_F(StrictPartition({3, 1}));
  q31 *= 4;
  CHECK(schurQ_F(StrictPartition({3, 1})) == q31);
  for (int n = 1; n <= 6; ++n)
    for (const auto& gamma : strict_partitions_of(n)) {
      QSymF p = schurP_F(gamma), q = schurQ_F(gamma);
      for (const auto& [mask, c] : p.coeff())
        CHECK(q.coeff_of(DescentSet::from_mask(n, mask)) == c * (1LL << gamma.length()));
    }
}

TEST_CASE("decomposition in the Schur basis") {
  BasisExpansion e = decompose(schurP_F(StrictPartition({3, 1})), Basis::schur);
  CHECK(e.coeff ==
        std::map<std::vector<int>, long long>{{{3, 1}, 1}, {{2, 2}, 1}, {{2, 1, 1}, 1}});
  CHECK(e.all_nonnegative());

  CHECK(decompose(QSymF(4), Basis::schur).coeff.empty());
  CHECK(decompose(QSymF(4), Basis::schur_p).coeff.empty());

  // the only degree-2 Schur P-function has two terms
  CHECK_THROWS_AS(decompose(fq(2, {{{}, 1}}), Basis::schur_p), NotInSpanError);
}

TEST_CASE("shuffle products against worked values") {
  CHECK(shuffle_product(DescentSet(2, {1}), DescentSet(1, {})) ==
        fq(3, {{{1}, 1}, {{2}, 1}, {{1, 2}, 1}}));
  CHECK(shuffle_product(DescentSet(1, {}), DescentSet(1, {})) == fq(2, {{{}, 1}, {{1}, 1}}));
  QSymF lhs = fq(3, {{{1}, 2}, {{2}, 1}});
  CHECK(shuffle_product(lhs, QSymF(0)).is_zero());  // zero partner annihilates
  CHECK(shuffle_product(DescentSet(3, {1}), DescentSet::from_mask(0, 0)) ==
        fq(3, {{{1}, 1}}));
}

TEST_CASE("the value-based descent statistic fails the shuffle identity") {
  // shuffles of 21 and 3, with descents read off values instead of positions
  QSymF wrong(3);
  for (const Word& w : {Word{3, 2, 1}, Word{2, 3, 1}, Word{2, 1, 3}})
    wrong.add_term(descent_set(w), 1);
  CHECK(wrong == fq(3, {{{1}, 2}, {{1, 2}, 1}}));
  QSymF right = shuffle_product(DescentSet(2, {1}), DescentSet(1, {}));
  CHECK(!(wrong == right));
  Rational product = evaluate(fq(2, {{{1}, 1}}), kPoint) * evaluate(fq(1, {{{}, 1}}), kPoint);
  CHECK(evaluate(right, kPoint) == product);
  CHECK(evaluate(wrong, kPoint) != product);
}

TEST_CASE("representative words hit the requested descent positions") {
  for (int len = 1; len <= 6; ++len)
    for (uint32_t mask = 0; mask < (1u << (len - 1)); ++mask) {
      DescentSet positions = DescentSet::from_mask(len, mask);
      Word w = word_with_descent_positions(positions, 3);
      CHECK(word_descent_positions(w) == positions);
      CHECK(*std::min_element(w.begin(), w.end()) == 4);
    }
}

TEST_CASE("shuffle expansions agree with the evaluation oracle through degree 7") {
  const std::vector<std::vector<Rational>> points = {
      {{1, 2}, {1, 3}, {1, 5}}, {{2, 3}, {1, 7}, {4, 9}}, {{1, 3}, {2, 5}, {3, 7}}};
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; a + b <= 7; ++b)
      for (uint32_t ma = 0; ma < (1u << (a - 1)); ++ma)
        for (uint32_t mb = 0; mb < (1u << (b - 1)); ++mb) {
          DescentSet A = DescentSet::from_mask(a, ma), B = DescentSet::from_mask(b, mb);
          QSymF prod = shuffle_product(A, B);
          QSymF fa(a), fb(b);
          fa.add_term(A, 1);
          fb.add_term(B, 1);
          for (const auto& p : points)
            CHECK(evaluate(prod, p) == evaluate(fa, p) * evaluate(fb, p));
        }
}

TEST_CASE("evaluation counts admissible sequences") {
  CHECK(evaluate(fq(2, {{{}, 1}}), {1, 1}) == Rational(3));
  CHECK(evaluate(fq(2, {{{1}, 1}}), {1, 1}) == Rational(1));
  CHECK(evaluate(fq(3, {{{1}, 4}, {{2}, 7}}), {0, 0, 0}) == Rational(0));
}

TEST_CASE("Schur P evaluations are symmetric in the variables through size 7") {
  std::vector<Rational> p = kPoint;
  std::vector<int> order = {0, 1, 2};
  for (int n = 1; n <= 7; ++n)
    for (const auto& gamma : strict_partitions_of(n)) {
      QSymF f = schurP_F(gamma);
      Rational reference = evaluate(f, p);
      std::vector<int> perm = order;
      do {
        std::vector<Rational> q = {p[perm[0]], p[perm[1]], p[perm[2]]};
        CHECK(evaluate(f, q) == reference);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("printing and CSV forms") {
  QSymF f = fq(4, {{{1}, 1}, {{2}, 2}, {{1, 3}, 1}});
  CHECK(f.str() == "F{1} + F{1,3} + 2 F{2}");
  CHECK(QSymF(3).str() == "0");
  QSymF neg = fq(2, {{{1}, -3}});
  CHECK(neg.str() == "- 3 F{1}");

  BasisExpansion e{Basis::schur, {{{3, 1}, 1}, {{2, 2}, 2}}};
  CHECK(to_csv(e) == "shape,coefficient\n\"2,2\",2\n\"3,1\",1\n");
}

}  // TEST_SUITE
