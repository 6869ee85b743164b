#include "doctest.h"

#include <stdexcept>

#include "qdeg/shapes.hpp"

using namespace qdeg;

TEST_SUITE("shapes") {

TEST_CASE("strict partition enumeration, decreasing lexicographic") {
  auto list4 = strict_partitions_of(4);
  REQUIRE(list4.size() == 2);
  CHECK(list4[0].parts() == std::vector<int>{4});
  CHECK(list4[1].parts() == std::vector<int>{3, 1});

  auto list1 = strict_partitions_of(1);
  REQUIRE(list1.size() == 1);
  CHECK(list1[0].parts() == std::vector<int>{1});

  auto list6 = strict_partitions_of(6);
  REQUIRE(list6.size() == 4);
  CHECK(list6[0].parts() == std::vector<int>{6});
  CHECK(list6[1].parts() == std::vector<int>{5, 1});
  CHECK(list6[2].parts() == std::vector<int>{4, 2});
  CHECK(list6[3].parts() == std::vector<int>{3, 2, 1});

  CHECK_THROWS_AS(strict_partitions_of(0), std::invalid_argument);
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(StrictPartition({2, 2}), std::invalid_argument);
  CHECK(Partition::parse("3,3,1").parts() == std::vector<int>{3, 3, 1});
  CHECK(StrictPartition::parse("").empty());
  CHECK(StrictPartition({3, 1}).str() == "3,1");
}

TEST_CASE("shifted diagram cells") {
  CHECK(shifted_diagram(StrictPartition({3, 1})) ==
        std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}, {2, 2}});
  CHECK(shifted_diagram(StrictPartition({1})) == std::vector<Cell>{{1, 1}});
  CHECK(shifted_diagram(StrictPartition({2, 1})) == std::vector<Cell>{{1, 1}, {1, 2}, {2, 2}});
}

TEST_CASE("symmetric diagram") {
  CHECK(sym_diagram(StrictPartition({6, 4, 3, 1})).parts() ==
        std::vector<int>{6, 5, 5, 4, 3, 1});
  CHECK(sym_diagram(StrictPartition({1})).parts() == std::vector<int>{1});
  CHECK(sym_diagram(StrictPartition({2, 1})).parts() == std::vector<int>{2, 2});
}

TEST_CASE("symmetric diagram size and self-conjugacy through size 10") {
  for (int n = 1; n <= 10; ++n)
    for (const auto& gamma : strict_partitions_of(n)) {
      Partition sym = sym_diagram(gamma);
      CHECK(sym.size() == 2 * gamma.size() - gamma.length());
      CHECK(conjugate(sym) == sym);
      for (const Cell& c : shifted_diagram(gamma)) CHECK(c.row <= c.col);
    }
}

TEST_CASE("boundary cells by exhaustive checking") {
  auto b31 = boundary_cells(StrictPartition({3, 1}));
  CHECK(b31.removable == std::vector<Cell>{{1, 3}, {2, 2}});

  // removing the end of row 1 of (2,1) leaves equal rows, so only the
  // second-row cell is removable
  auto b21 = boundary_cells(StrictPartition({2, 1}));
  CHECK(b21.removable == std::vector<Cell>{{2, 2}});
  CHECK(b21.addable == std::vector<Cell>{{1, 3}});

  auto b1 = boundary_cells(StrictPartition({1}));
  CHECK(b1.addable == std::vector<Cell>{{1, 2}});
  CHECK(b1.removable == std::vector<Cell>{{1, 1}});

  auto p22 = boundary_cells(Partition({2, 2}));
  CHECK(p22.addable == std::vector<Cell>{{1, 3}, {3, 1}});
  CHECK(p22.removable == std::vector<Cell>{{2, 2}});
}

TEST_CASE("addable and removable cells are disjoint and consistent") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& gamma : strict_partitions_of(n)) {
      auto b = boundary_cells(gamma);
      for (const Cell& a : b.addable)
        for (const Cell& r : b.removable) CHECK(a != r);
      CHECK(!b.addable.empty());
    }
}

}  // TEST_SUITE
