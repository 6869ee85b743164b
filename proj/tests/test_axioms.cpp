#include "doctest.h"

#include "qdeg/axioms.hpp"
#include "qdeg/repro.hpp"

using namespace qdeg;

namespace {

bool has_failure(const AxiomReport& r, const std::string& condition, const std::string& fragment) {
  for (const auto& f : r.failures)
    if (f.condition == condition && f.explanation.find(fragment) != std::string::npos) return true;
  return false;
}

// locate the letter of absolute value v; (row, col, marked)
std::tuple<int, int, bool> locate(const SignedShiftedTableau& s, int v) {
  for (size_t r = 0; r < s.rows.size(); ++r)
    for (size_t j = 0; j < s.rows[r].size(); ++j)
      if (s.rows[r][j].value == v)
        return {static_cast<int>(r) + 1, static_cast<int>(r) + 1 + static_cast<int>(j),
                s.rows[r][j].marked};
  return {0, 0, false};
}

}  // namespace

TEST_SUITE("axioms") {

TEST_CASE("dual equivalence audits pass on the standard families") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) CHECK(check_deg(syt_graph(lambda)).pass);
    for (const auto& gamma : strict_partitions_of(n))
      CHECK(check_deg(sst_graph(gamma, false)).pass);
  }
}

TEST_CASE("a deleted edge breaks the window condition") {
  DEGraph g = sst_graph(StrictPartition({3, 1}), false);
  DEGraph broken(g.degree(), g.ids(), [&] {
    std::vector<DescentSet> des;
    for (int v = 0; v < g.vertex_count(); ++v) des.push_back(g.descent(v));
    return des;
  }());
  bool dropped = false;
  for (const auto& [label, a, b] : g.edge_list()) {
    if (!dropped && label == 2) {
      dropped = true;
      broken.add_label(label);
      continue;
    }
    broken.add_pair(label, a, b);
  }
  REQUIRE(dropped);
  AxiomReport r = check_deg(broken);
  CHECK(!r.pass);
  CHECK(has_failure(r, "i", "matching no Schur function"));
}

TEST_CASE("queer audits pass on the standard families") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& gamma : strict_partitions_of(n))
      CHECK(check_queer_deg(sst_graph(gamma, true)).pass);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; a + b <= 6; ++b)
      for (const auto& gamma : strict_partitions_of(a))
        for (const auto& delta : strict_partitions_of(b))
          CHECK(check_queer_deg(tensor_graph(gamma, delta, true)).pass);
}

TEST_CASE("the doubled-class pairing fails the queer window condition") {
  AxiomReport r = check_queer_deg(repro::doubled_class_pairing());
  CHECK(!r.pass);
  CHECK(has_failure(r, "i", "2 P[2,1]"));
}

TEST_CASE("a fixed point fails the smallest queer window") {
  AxiomReport r = check_queer_deg(repro::fixed_point_pairing());
  CHECK(!r.pass);
  CHECK(has_failure(r, "i", "fixed-point-free"));
}

TEST_CASE("the double cover fails the two-edge bound") {
  AxiomReport r = check_queer_deg(repro::double_cover_graph());
  CHECK(!r.pass);
  CHECK(has_failure(r, "iii", "need 3"));
}

TEST_CASE("classifying full classes") {
  DEGraph g = sst_graph(StrictPartition({3, 1}), true);
  auto full = components(g)[0];
  CHECK(classify_class(full, g) == StrictPartition({3, 1}));

  // a passing class decomposes to the classified shape with coefficient 1
  QSymF f = from_descent_multiset(g.degree(), descent_multiset(full, g));
  CHECK(decompose(f, Basis::schur_p).coeff ==
        std::map<std::vector<int>, long long>{{{3, 1}, 1}});

  DEGraph t22 = tensor_graph(StrictPartition({2}), StrictPartition({2}), true);
  std::map<std::vector<int>, int> tally;
  for (const auto& cls : components(t22)) ++tally[classify_class(cls, t22).parts()];
  CHECK(tally == std::map<std::vector<int>, int>{{{4}, 1}, {{3, 1}, 2}});

  // the two-element family with the queer pairing classifies as a column
  DEGraph pair = syt_union_graph({Partition({2, 1})});
  pair.add_pair(0, pair.index_of("1,2/3"), pair.index_of("1,3/2"));
  CHECK(classify_class(components(pair)[0], pair) == StrictPartition({2, 1}));

  // a class matching no family multiset certifies failure
  DEGraph bad = repro::fixed_point_pairing();
  CHECK_THROWS_AS(classify_class(components(bad)[0], bad), NotQueerDEGError);
}

TEST_CASE("extension searches reproduce the unique pairings") {
  auto found = unique_extension_search(syt_union_graph({Partition({2}), Partition({1, 1})}));
  REQUIRE(found.size() == 1);
  CHECK(found[0] == QueerPairing{{"1,2", "1/2"}});

  found = unique_extension_search(
      syt_union_graph({Partition({3}), Partition({2, 1}), Partition({1, 1, 1})}));
  REQUIRE(found.size() == 1);
  CHECK(found[0] == QueerPairing{{"1,2,3", "1,3/2"}, {"1,2/3", "1/2/3"}});

  found = unique_extension_search(
      syt_union_graph({Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1})}));
  REQUIRE(found.size() == 1);
  CHECK(found[0] == QueerPairing{{"1,2,3/4", "1,3/2,4"},
                                 {"1,2,4/3", "1,3,4/2"},
                                 {"1,2/3,4", "1,4/2/3"},
                                 {"1,2/3/4", "1,3/2/4"}});

  CHECK_THROWS_AS(unique_extension_search(syt_graph(Partition({3, 2, 1}))), CapacityError);
}

TEST_CASE("restricted classes determine a contained shape and a fixed top letter") {
  // needs n >= 3 so the restricted involutions avoid the top letter
  for (int n = 3; n <= 6; ++n)
    for (const auto& gamma : strict_partitions_of(n)) {
      DEGraph g = sst_graph(gamma, true);
      std::set<int> labels{0};
      for (int l = 2; l <= n - 2; ++l) labels.insert(l);
      std::set<int> present;
      for (int l : labels)
        if (g.labels().count(l)) present.insert(l);

      std::vector<std::pair<StrictPartition, QSymF>> table;
      if (n >= 2)
        for (const auto& delta : strict_partitions_of(n - 1))
          table.push_back({delta, schurP_F(delta)});

      for (const auto& cls : components(g, present)) {
        // the letter n sits in one cell, with one marking, across the class
        auto reference = locate(parse_sst(g.id(cls[0])), n);
        for (int v : cls) CHECK(locate(parse_sst(g.id(v)), n) == reference);

        // the class carries the Schur P-function of a contained shape
        QSymF f(n - 1);
        for (int v : cls) f.add_term(g.descent(v).restricted(1, n - 1), 1);
        const StrictPartition* match = nullptr;
        for (const auto& [delta, q] : table)
          if (q == f) {
            match = &delta;
            break;
          }
        REQUIRE(match != nullptr);
        REQUIRE(match->length() <= gamma.length());
        CHECK(match->length() >= gamma.length() - 1);
        for (int k = 1; k <= match->length(); ++k) CHECK(match->part(k) <= gamma.part(k));
        CHECK(match->size() == n - 1);
      }
    }
}

TEST_CASE("reports carry interpretation notes and witnesses") {
  AxiomReport r = check_queer_deg(repro::doubled_class_pairing());
  CHECK(!r.notes.empty());
  std::string text = r.str();
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("witnesses:") != std::string::npos);
  CHECK(check_deg(syt_graph(Partition({3, 1}))).str().find("PASS") != std::string::npos);
}

}  // TEST_SUITE
