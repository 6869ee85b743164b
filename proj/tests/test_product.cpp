#include "doctest.h"

#include "qdeg/involutions.hpp"
#include "qdeg/product.hpp"

using namespace qdeg;

namespace {

QSymF fq(int degree, std::initializer_list<std::pair<std::vector<int>, long long>> terms) {
  QSymF f(degree);
  for (const auto& [members, c] : terms) f.add_term(DescentSet::from_members(degree, members), c);
  return f;
}

}  // namespace

TEST_SUITE("product") {

TEST_CASE("fundamental expansion of products") {
  CHECK(product_F(StrictPartition({2, 1}), StrictPartition({1})) ==
        fq(4, {{{1}, 1}, {{2}, 2}, {{3}, 1}, {{1, 2}, 1}, {{1, 3}, 2}, {{2, 3}, 1}}));
  CHECK(product_F(StrictPartition({1}), StrictPartition({1})) == fq(2, {{{}, 1}, {{1}, 1}}));
  CHECK(product_F(StrictPartition({1}), StrictPartition()) == schurP_F(StrictPartition({1})));
}

TEST_CASE("structure constants from graph components") {
  CHECK(structure_constants(StrictPartition({2, 1}), StrictPartition({1})).entries ==
        std::map<std::vector<int>, long long>{{{3, 1}, 1}});
  CHECK(structure_constants(StrictPartition({2}), StrictPartition({2})).entries ==
        std::map<std::vector<int>, long long>{{{4}, 1}, {{3, 1}, 2}});
  CHECK(structure_constants(StrictPartition({1}), StrictPartition({1})).entries ==
        std::map<std::vector<int>, long long>{{{2}, 1}});
  CHECK(structure_constants(StrictPartition({3}), StrictPartition({1})).entries ==
        std::map<std::vector<int>, long long>{{{4}, 1}, {{3, 1}, 1}});
}

TEST_CASE("Schur coefficients from the unqueered graph") {
  CHECK(schur_coeffs_of_P(StrictPartition({3, 1})).coeff ==
        std::map<std::vector<int>, long long>{{{3, 1}, 1}, {{2, 2}, 1}, {{2, 1, 1}, 1}});
  CHECK(schur_coeffs_of_P(StrictPartition({1})).coeff ==
        std::map<std::vector<int>, long long>{{{1}, 1}});
  CHECK(schur_coeffs_of_P(StrictPartition({2})).coeff ==
        std::map<std::vector<int>, long long>{{{2}, 1}, {{1, 1}, 1}});
}

TEST_CASE("the two computation routes agree through size 6") {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; a + b <= 6; ++b)
      for (const auto& gamma : strict_partitions_of(a))
        for (const auto& delta : strict_partitions_of(b)) {
          StructureTable t = structure_constants(gamma, delta);
          CHECK(t.entries == structure_constants(delta, gamma).entries);
          QSymF pf = product_F(gamma, delta);
          CHECK(decompose(pf, Basis::schur_p).coeff == t.entries);
          CHECK(shuffle_product(schurP_F(gamma), schurP_F(delta)) == pf);
          long long total = 0;
          for (const auto& [eps, c] : t.entries)
            total += c * static_cast<long long>(generate_sst(StrictPartition(eps)).size());
          CHECK(total == static_cast<long long>(generate_tensor(gamma, delta).size()));
        }
}

TEST_CASE("Schur coefficients agree with the exact decomposition through size 8") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& gamma : strict_partitions_of(n))
      CHECK(schur_coeffs_of_P(gamma).coeff == decompose(schurP_F(gamma), Basis::schur).coeff);
}

TEST_CASE("CSV export") {
  StructureTable t = structure_constants(StrictPartition({2}), StrictPartition({2}));
  CHECK(to_csv(t) ==
        "gamma,delta,epsilon,coefficient\n\"2\",\"2\",\"3,1\",2\n\"2\",\"2\",\"4\",1\n");
}

}  // TEST_SUITE
