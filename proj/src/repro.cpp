#include "qdeg/repro.hpp"

#include <algorithm>
#include <tuple>

#include "qdeg/involutions.hpp"
#include "qdeg/product.hpp"

namespace qdeg::repro {

namespace {

struct Checker {
  CheckResult result;
  Checker(int number, std::string name) {
    result.number = number;
    result.name = std::move(name);
    result.pass = true;
  }
  void require(bool ok, const std::string& what) {
    if (ok) return;
    result.pass = false;
    if (result.details.size() < 16) result.details.push_back(what);
  }
};

using EdgeKey = std::tuple<int, std::string, std::string>;

EdgeKey edge_key(int label, std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {label, std::move(a), std::move(b)};
}

std::set<EdgeKey> graph_edges(const DEGraph& g) {
  std::set<EdgeKey> out;
  for (const auto& [label, a, b] : g.edge_list()) out.insert(edge_key(label, g.id(a), g.id(b)));
  return out;
}

std::set<EdgeKey> expected_edges(const std::vector<EdgeKey>& list) {
  std::set<EdgeKey> out;
  for (const auto& [l, a, b] : list) out.insert(edge_key(l, a, b));
  return out;
}

QSymF f_of(int degree, std::initializer_list<std::pair<std::vector<int>, long long>> terms) {
  QSymF f(degree);
  for (const auto& [members, c] : terms) f.add_term(DescentSet::from_members(degree, members), c);
  return f;
}

std::vector<std::pair<StrictPartition, StrictPartition>> shape_pairs(int max_total) {
  std::vector<std::pair<StrictPartition, StrictPartition>> out;
  for (int a = 1; a < max_total; ++a)
    for (int b = 1; a + b <= max_total; ++b)
      for (const auto& gamma : strict_partitions_of(a))
        for (const auto& delta : strict_partitions_of(b)) out.push_back({gamma, delta});
  return out;
}

// Unmarked signed standard tableaux counted the slow way: every
// permutation of 1..n laid into the shifted diagram, kept when rows and
// columns increase.
long long brute_force_unmarked_count(const StrictPartition& gamma) {
  int n = gamma.size();
  int ell = gamma.length();
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k + 1;
  // values laid row-major, bottom row first; cell (r, r+j) is the row's
  // j-th value, and its column neighbor above is index j-1 in row r+1
  std::vector<int> row_start(ell + 1, 0);
  for (int r = 0; r < ell; ++r) row_start[r + 1] = row_start[r] + gamma.parts()[r];
  long long count = 0;
  do {
    bool ok = true;
    for (int r = 0; ok && r < ell; ++r) {
      for (int j = 0; ok && j < gamma.parts()[r]; ++j) {
        int v = perm[row_start[r] + j];
        if (j > 0 && perm[row_start[r] + j - 1] >= v) ok = false;
        if (ok && r + 1 < ell && j >= 1 && j - 1 < gamma.parts()[r + 1] &&
            v >= perm[row_start[r + 1] + j - 1])
          ok = false;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

bool contains_failure(const AxiomReport& report, const std::string& condition,
                      const std::string& fragment) {
  for (const auto& f : report.failures)
    if (f.condition == condition && f.explanation.find(fragment) != std::string::npos) return true;
  return false;
}

// --- hand-transcribed reference graphs ---

const std::vector<EdgeKey>& sst31_expected() {
  static const std::vector<EdgeKey> edges = {
      {0, "1,2',4/3", "1,2,4/3"},   {0, "1,2,3/4", "1,2',3/4"},  {0, "1,2,3'/4", "1,2',3'/4"},
      {0, "1,2',4'/3", "1,2,4'/3"}, {2, "1,2',4/3", "1,2,4/3"},  {2, "1,2',3/4", "1,2,3'/4"},
      {2, "1,2',4'/3", "1,2,4'/3"}, {3, "1,2,4/3", "1,2,3/4"},   {3, "1,2',3/4", "1,2,3'/4"},
      {3, "1,2',3'/4", "1,2',4'/3"}};
  return edges;
}

const std::vector<EdgeKey>& sst4_expected() {
  static const std::vector<EdgeKey> edges = {
      {0, "1,2,3,4", "1,2',3,4"},   {0, "1,2,3',4", "1,2',3',4"}, {0, "1,2,3,4'", "1,2',3,4'"},
      {0, "1,2,3',4'", "1,2',3',4'"}, {2, "1,2',3,4", "1,2,3',4"}, {2, "1,2',3,4'", "1,2,3',4'"},
      {3, "1,2,3',4", "1,2,3,4'"},  {3, "1,2',3',4", "1,2',3,4'"}};
  return edges;
}

const std::vector<EdgeKey>& sst41_expected() {
  static const std::vector<EdgeKey> edges = {
      // block with a marked 5 appended to the first row
      {2, "1,2',4,5'/3", "1,2,4,5'/3"},
      {2, "1,2',3,5'/4", "1,2,3',5'/4"},
      {2, "1,2',4',5'/3", "1,2,4',5'/3"},
      {3, "1,2,4,5'/3", "1,2,3,5'/4"},
      {3, "1,2',3,5'/4", "1,2,3',5'/4"},
      {3, "1,2',3',5'/4", "1,2',4',5'/3"},
      {0, "1,2',4,5'/3", "1,2,4,5'/3"},
      {0, "1,2,3,5'/4", "1,2',3,5'/4"},
      {0, "1,2,3',5'/4", "1,2',3',5'/4"},
      {0, "1,2',4',5'/3", "1,2,4',5'/3"},
      // block with an unmarked 5 appended to the first row
      {2, "1,2',4,5/3", "1,2,4,5/3"},
      {2, "1,2',3,5/4", "1,2,3',5/4"},
      {2, "1,2',4',5/3", "1,2,4',5/3"},
      {3, "1,2,4,5/3", "1,2,3,5/4"},
      {3, "1,2',3,5/4", "1,2,3',5/4"},
      {3, "1,2',3',5/4", "1,2',4',5/3"},
      {0, "1,2',4,5/3", "1,2,4,5/3"},
      {0, "1,2,3,5/4", "1,2',3,5/4"},
      {0, "1,2,3',5/4", "1,2',3',5/4"},
      {0, "1,2',4',5/3", "1,2,4',5/3"},
      // block with 5 on the second row
      {2, "1,2',3,4/5", "1,2,3',4/5"},
      {2, "1,2',3,4'/5", "1,2,3',4'/5"},
      {3, "1,2,3',4/5", "1,2,3,4'/5"},
      {3, "1,2',3',4/5", "1,2',3,4'/5"},
      {0, "1,2,3,4/5", "1,2',3,4/5"},
      {0, "1,2,3',4/5", "1,2',3',4/5"},
      {0, "1,2,3,4'/5", "1,2',3,4'/5"},
      {0, "1,2,3',4'/5", "1,2',3',4'/5"},
      // top-label edges
      {4, "1,2',4,5'/3", "1,2',4',5/3"},
      {4, "1,2,4,5'/3", "1,2,4',5/3"},
      {4, "1,2',3',5'/4", "1,2',3',4'/5"},
      {4, "1,2,3',5'/4", "1,2,3',4'/5"},
      {4, "1,2',3,5/4", "1,2',3,4/5"},
      {4, "1,2,3,5/4", "1,2,3,4/5"},
      {4, "1,2,3',4/5", "1,2,3,4'/5"},
      {4, "1,2',3',4/5", "1,2',3,4'/5"}};
  return edges;
}

const std::vector<EdgeKey>& tensor21_1_expected() {
  static const std::vector<EdgeKey> edges = {
      {2, "1,2'/3|4", "1,2/3|4"}, {2, "1,3'/4|2", "1,2'/4|3"}, {2, "2,3/4|1", "1,3/4|2"},
      {3, "1,2/3|4", "1,2/4|3"},  {3, "1,3'/4|2", "1,2'/4|3"}, {3, "2,3'/4|1", "2,3/4|1"},
      {0, "1,2'/3|4", "1,2/3|4"}, {0, "1,2/4|3", "1,2'/4|3"},  {0, "1,3'/4|2", "2,3'/4|1"},
      {0, "2,3/4|1", "1,3/4|2"}};
  return edges;
}

const std::vector<EdgeKey>& tensor1_21_expected() {
  static const std::vector<EdgeKey> edges = {
      {2, "2|1,3'/4", "1|2,3'/4"}, {2, "3|1,2/4", "2|1,3/4"}, {2, "4|1,2'/3", "4|1,2/3"},
      {3, "1|2,3'/4", "1|2,3/4"},  {3, "3|1,2/4", "2|1,3/4"}, {3, "3|1,2'/4", "4|1,2'/3"},
      {0, "2|1,3'/4", "1|2,3'/4"}, {0, "1|2,3/4", "2|1,3/4"}, {0, "3|1,2/4", "3|1,2'/4"},
      {0, "4|1,2'/3", "4|1,2/3"}};
  return edges;
}

struct Tensor22Reference {
  std::vector<std::string> vertices;
  std::vector<EdgeKey> edges;
};

const Tensor22Reference& tensor22_reference() {
  static const Tensor22Reference fig = {
      {"2,3|1,4", "1,3|2,4", "1,4|2,3", "2,4|1,3", "3,4|1,2", "3,4|1,2'", "2,4|1,3'", "1,4|2,3'",
       "1,2|3,4", "1,2'|3,4", "1,3'|2,4", "1,4'|2,3", "2,3'|1,4", "2,4'|1,3", "3,4'|1,2",
       "3,4'|1,2'"},
      {{2, "2,3|1,4", "1,3|2,4"},   {2, "3,4|1,2", "2,4|1,3"},  {2, "1,4|2,3'", "2,4|1,3'"},
       {2, "1,2'|3,4", "1,3'|2,4"}, {2, "2,4'|1,3", "3,4'|1,2"},
       {3, "1,3|2,4", "1,4|2,3"},   {3, "3,4|1,2", "2,4|1,3"},  {3, "3,4|1,2'", "2,4|1,3'"},
       {3, "1,3'|2,4", "1,4'|2,3"}, {3, "2,3'|1,4", "2,4'|1,3"},
       {0, "2,3|1,4", "1,3|2,4"},   {0, "1,4|2,3", "2,4|1,3"},  {0, "3,4|1,2", "3,4|1,2'"},
       {0, "1,4|2,3'", "2,4|1,3'"}, {0, "1,2|3,4", "1,2'|3,4"}, {0, "1,3'|2,4", "2,3'|1,4"},
       {0, "1,4'|2,3", "2,4'|1,3"}, {0, "3,4'|1,2", "3,4'|1,2'"}}};
  return fig;
}

}  // namespace

DEGraph doubled_class_pairing() {
  DEGraph g = syt_union_graph(
      {Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1})});
  for (auto [a, b] : std::initializer_list<std::pair<const char*, const char*>>{
           {"1,2,3/4", "1,3,4/2"},
           {"1,2,4/3", "1,4/2/3"},
           {"1,3/2/4", "1,2/3,4"},
           {"1,2/3/4", "1,3/2,4"}})
    g.add_pair(0, g.index_of(a), g.index_of(b));
  return g;
}

DEGraph fixed_point_pairing() {
  DEGraph g = syt_union_graph({Partition({2}), Partition({1, 1})});
  g.add_label(0);
  return g;
}

DEGraph double_cover_graph() {
  std::vector<std::string> ids = {"T1", "a1", "A1", "A2", "a2", "T2"};
  std::vector<DescentSet> des(ids.size(), DescentSet::from_mask(5, 0));
  DEGraph g(5, ids, des);
  for (auto [a, b] : std::initializer_list<std::pair<const char*, const char*>>{
           {"T1", "a1"}, {"T1", "A1"}, {"a1", "A2"}, {"A1", "a2"}, {"A2", "T2"}, {"a2", "T2"}})
    g.add_pair(4, g.index_of(a), g.index_of(b));
  return g;
}

namespace {

CheckResult check_fundamental_expansions() {
  Checker c(1, "fundamental expansions of s[3,1], P[3,1] and P[2,1]P[1]");
  QSymF s31 = f_of(4, {{{1}, 1}, {{2}, 1}, {{3}, 1}});
  QSymF p31 = f_of(4, {{{1}, 1}, {{2}, 2}, {{3}, 1}, {{1, 2}, 1}, {{1, 3}, 2}, {{2, 3}, 1}});
  c.require(schur_F(Partition({3, 1})) == s31, "s[3,1] differs from F{1}+F{2}+F{3}");
  c.require(schurP_F(StrictPartition({3, 1})) == p31,
            "P[3,1] differs from F{1}+2F{2}+F{3}+F{1,2}+2F{1,3}+F{2,3}");
  c.require(product_F(StrictPartition({2, 1}), StrictPartition({1})) == p31,
            "P[2,1]P[1] differs from the P[3,1] expansion");
  return c.result;
}

CheckResult check_schur_expansion() {
  Checker c(2, "Schur expansion of P[3,1]; nonnegativity through size 8");
  BasisExpansion expected{Basis::schur, {{{3, 1}, 1}, {{2, 2}, 1}, {{2, 1, 1}, 1}}};
  c.require(decompose(schurP_F(StrictPartition({3, 1})), Basis::schur) == expected,
            "P[3,1] != s[3,1]+s[2,2]+s[2,1,1]");
  for (int n = 1; n <= 8; ++n)
    for (const auto& gamma : strict_partitions_of(n)) {
      BasisExpansion e = decompose(schurP_F(gamma), Basis::schur);
      c.require(e.all_nonnegative(), "negative Schur coefficient in P[" + gamma.str() + "]");
    }
  return c.result;
}

CheckResult check_reference_graphs() {
  Checker c(3, "reference graphs: SST(3,1), SST(4), SST(4,1), both (2,1)/(1) tensors, (2)x(2)");
  auto expect_graph = [&](const DEGraph& g, const std::vector<EdgeKey>& expected, size_t vertices,
                          const std::string& name) {
    c.require(g.vertex_count() == static_cast<int>(vertices),
              name + ": expected " + std::to_string(vertices) + " vertices, found " +
                  std::to_string(g.vertex_count()));
    c.require(graph_edges(g) == expected_edges(expected), name + ": edge set mismatch");
  };
  expect_graph(sst_graph(StrictPartition({3, 1}), true), sst31_expected(), 8, "SST(3,1)");
  expect_graph(sst_graph(StrictPartition({4}), true), sst4_expected(), 8, "SST(4)");
  expect_graph(sst_graph(StrictPartition({4, 1}), true), sst41_expected(), 24, "SST(4,1)");
  expect_graph(tensor_graph(StrictPartition({2, 1}), StrictPartition({1}), true),
               tensor21_1_expected(), 8, "SST((2,1)x(1))");
  expect_graph(tensor_graph(StrictPartition({1}), StrictPartition({2, 1}), true),
               tensor1_21_expected(), 8, "SST((1)x(2,1))");

  // The hand-transcribed (2)x(2) reference covers two of the three
  // components; its sixteen vertices must induce exactly the listed edges
  // and form two full components of the graph.
  DEGraph g22 = tensor_graph(StrictPartition({2}), StrictPartition({2}), true);
  const auto& ref = tensor22_reference();
  c.require(g22.vertex_count() == 24, "SST((2)x(2)): expected 24 vertices");
  std::set<std::string> ref_vertices(ref.vertices.begin(), ref.vertices.end());
  std::set<EdgeKey> induced;
  for (const auto& [label, a, b] : g22.edge_list())
    if (ref_vertices.count(g22.id(a)) && ref_vertices.count(g22.id(b)))
      induced.insert(edge_key(label, g22.id(a), g22.id(b)));
  c.require(induced == expected_edges(ref.edges), "SST((2)x(2)): induced edge set mismatch");
  int components_inside = 0;
  for (const auto& cls : components(g22)) {
    bool all_in = true, none_in = true;
    for (int v : cls) (ref_vertices.count(g22.id(v)) ? none_in : all_in) = false;
    c.require(all_in || none_in, "SST((2)x(2)): a component crosses the reference vertex set");
    if (all_in) ++components_inside;
  }
  c.require(components_inside == 2, "SST((2)x(2)): reference vertices are not two full components");
  return c.result;
}

CheckResult check_connectivity_and_two_edge_bound() {
  Checker c(4, "connectivity through size 8; two-edge bound through size 7");
  for (int n = 1; n <= 8; ++n)
    for (const auto& gamma : strict_partitions_of(n)) {
      DEGraph g = sst_graph(gamma, true);
      c.require(components(g).size() == 1, "queer graph on SST(" + gamma.str() + ") disconnected");
      if (n <= 7 && n >= 2) {
        int need = max_special_edge_need(g, g.labels(), n - 1);
        c.require(need <= 2, "SST(" + gamma.str() + ") needs " + std::to_string(need) +
                                 " top-label edges");
      }
    }
  return c.result;
}

CheckResult check_axiom_audits() {
  Checker c(5, "axiom audits on all standard graphs through size 7");
  for (int n = 1; n <= 7; ++n) {
    for (const auto& gamma : strict_partitions_of(n)) {
      AxiomReport r = check_queer_deg(sst_graph(gamma, true));
      c.require(r.pass, "queer audit fails on SST(" + gamma.str() + ")");
    }
    for (const auto& lambda : partitions_of(n)) {
      AxiomReport r = check_deg(syt_graph(lambda));
      c.require(r.pass, "audit fails on SYT(" + lambda.str() + ")");
    }
  }
  for (const auto& [gamma, delta] : shape_pairs(7)) {
    AxiomReport r = check_queer_deg(tensor_graph(gamma, delta, true));
    c.require(r.pass, "queer audit fails on SST(" + gamma.str() + " x " + delta.str() + ")");
  }
  return c.result;
}

CheckResult check_negative_fixtures() {
  Checker c(6, "counterexample fixtures fail for the identified conditions");
  AxiomReport doubled = check_queer_deg(doubled_class_pairing());
  c.require(!doubled.pass, "doubled-class pairing unexpectedly passes");
  c.require(contains_failure(doubled, "i", "2 P[2,1]"),
            "doubled-class pairing lacks a 2 P[2,1] window failure");

  AxiomReport fixed = check_queer_deg(fixed_point_pairing());
  c.require(!fixed.pass, "fixed-point pairing unexpectedly passes");
  c.require(contains_failure(fixed, "i", "fixed-point-free"),
            "fixed-point pairing lacks a fixed-point failure");

  DEGraph cover = double_cover_graph();
  c.require(max_special_edge_need(cover, {4}, 4) == 3,
            "double cover: top-label need is not 3");
  AxiomReport cover_report = check_queer_deg(cover);
  c.require(!cover_report.pass, "double cover unexpectedly passes");
  c.require(contains_failure(cover_report, "iii", "need 3"),
            "double cover lacks a two-edge-bound failure of need 3");
  return c.result;
}

CheckResult check_unique_extensions() {
  Checker c(7, "unique queer extensions on the small standard families");
  auto expect_unique = [&](const DEGraph& base, const QueerPairing& expected,
                           const std::string& name) {
    auto found = unique_extension_search(base);
    c.require(found.size() == 1,
              name + ": " + std::to_string(found.size()) + " candidates instead of 1");
    if (found.size() == 1)
      c.require(found[0] == expected, name + ": candidate differs from the reference pairing");
  };
  expect_unique(sst_graph(StrictPartition({2}), false), {{"1,2", "1,2'"}}, "SST(2)");
  expect_unique(syt_union_graph({Partition({2}), Partition({1, 1})}), {{"1,2", "1/2"}},
                "SYT(2)+SYT(1,1)");
  expect_unique(syt_union_graph({Partition({2, 1})}), {{"1,2/3", "1,3/2"}}, "SYT(2,1)");
  expect_unique(syt_union_graph({Partition({3}), Partition({2, 1}), Partition({1, 1, 1})}),
                {{"1,2,3", "1,3/2"}, {"1,2/3", "1/2/3"}}, "SYT(3)+SYT(2,1)+SYT(1,1,1)");
  expect_unique(syt_union_graph({Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1})}),
                {{"1,2,3/4", "1,3/2,4"},
                 {"1,2,4/3", "1,3,4/2"},
                 {"1,2/3,4", "1,4/2/3"},
                 {"1,2/3/4", "1,3/2/4"}},
                "SYT(3,1)+SYT(2,2)+SYT(2,1,1)");
  expect_unique(
      syt_union_graph(
          {Partition({4}), Partition({3, 1}), Partition({2, 1, 1}), Partition({1, 1, 1, 1})}),
      {{"1,2,3,4", "1,3,4/2"}, {"1,2,3/4", "1,3/2/4"}, {"1,2,4/3", "1,4/2/3"},
       {"1,2/3/4", "1/2/3/4"}},
      "SYT(4)+SYT(3,1)+SYT(2,1,1)+SYT(1^4)");
  return c.result;
}

CheckResult check_structure_constants() {
  Checker c(8, "structure constants with symmetry, decomposition and shuffle oracles");
  StructureTable t211 = structure_constants(StrictPartition({2, 1}), StrictPartition({1}));
  c.require(t211.entries == std::map<std::vector<int>, long long>{{{3, 1}, 1}},
            "P[2,1]P[1] table is not exactly {P[3,1]: 1}");

  // small prime content keeps every intermediate denominator in 64 bits
  const std::vector<std::vector<Rational>> points = {
      {{1, 2}, {1, 3}, {1, 5}},
      {{2, 3}, {1, 7}, {4, 9}},
      {{1, 3}, {2, 5}, {3, 7}},
  };
  for (const auto& [gamma, delta] : shape_pairs(8)) {
    if (delta.parts() < gamma.parts()) continue;  // unordered pairs; symmetry covers the rest
    std::string name = "P[" + gamma.str() + "].P[" + delta.str() + "]";
    StructureTable t = structure_constants(gamma, delta);
    StructureTable t_rev = structure_constants(delta, gamma);
    c.require(t.entries == t_rev.entries, name + ": table not symmetric");

    long long family = 0;
    for (const auto& [eps, coeff] : t.entries)
      family += coeff *
                static_cast<long long>(generate_sst(StrictPartition(eps)).size());
    c.require(family == static_cast<long long>(
                            generate_tensor(gamma, delta).size()),
              name + ": family sizes do not tally");

    QSymF pf = product_F(gamma, delta);
    BasisExpansion viaf = decompose(pf, Basis::schur_p);
    c.require(viaf.coeff == t.entries, name + ": linear decomposition disagrees with the tally");

    QSymF via_shuffle = shuffle_product(schurP_F(gamma), schurP_F(delta));
    c.require(via_shuffle == pf, name + ": shuffle expansion disagrees");

    for (const auto& p : points) {
      Rational lhs = evaluate(pf, p);
      Rational rhs = evaluate(schurP_F(gamma), p) * evaluate(schurP_F(delta), p);
      c.require(lhs == rhs, name + ": evaluation mismatch at a rational point");
    }
  }
  return c.result;
}

CheckResult check_involution_properties() {
  Checker c(9, "involution properties, exhaustively through size 8");

  auto on_diagonal = [](const SignedShiftedTableau& s, int value) {
    for (size_t r = 0; r < s.rows.size(); ++r)
      for (size_t j = 0; j < s.rows[r].size(); ++j)
        if (s.rows[r][j].value == value) return j == 0;
    return false;
  };

  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& t : generate_syt(lambda)) {
        for (int i = 2; i < n; ++i) {
          StandardYoungTableau u = deg_syt(t, i);
          c.require(deg_syt(u, i) == t, "deg_syt not an involution on SYT(" + lambda.str() + ")");
          for (int j = i + 3; j < n; ++j)
            c.require(deg_syt(deg_syt(t, i), j) == deg_syt(deg_syt(t, j), i),
                      "deg_syt commutation fails on SYT(" + lambda.str() + ")");
        }
      }
    }
    for (const auto& gamma : strict_partitions_of(n)) {
      for (const auto& s : generate_sst(gamma)) {
        DescentSet des = descent_set(s);
        for (int i = 2; i < n; ++i) {
          SignedShiftedTableau u = deg_sst(s, i);
          c.require(deg_sst(u, i) == s, "deg_sst not an involution on SST(" + gamma.str() + ")");
          c.require(u.shape == s.shape, "deg_sst changed the shape");
          if (deg_sst_case(s, i) == 2)
            c.require(on_diagonal(s, i - 1) && on_diagonal(s, i + 1),
                      "tied case without both neighbors on the main diagonal");
          for (int j = i + 3; j < n; ++j)
            c.require(deg_sst(deg_sst(s, i), j) == deg_sst(deg_sst(s, j), i),
                      "deg_sst commutation fails on SST(" + gamma.str() + ")");
        }
        if (n >= 2) {
          SignedShiftedTableau q = queer_sst(s);
          c.require(queer_sst(q) == s, "queer_sst not an involution");
          c.require(!(q == s), "queer_sst has a fixed point");
          DescentSet qdes = descent_set(q);
          c.require(des.contains(1) != qdes.contains(1), "queer_sst does not toggle descent 1");
          for (int i = 3; i < n; ++i)
            c.require(des.contains(i) == qdes.contains(i),
                      "queer_sst moves a descent at or above 3");
          for (int i = 4; i < n; ++i)
            c.require(queer_sst(deg_sst(s, i)) == deg_sst(queer_sst(s), i),
                      "queer_sst does not commute with a high label");
        }
      }
    }
  }

  for (const auto& [gamma, delta] : shape_pairs(8)) {
    int n = gamma.size() + delta.size();
    for (const auto& st : generate_tensor(gamma, delta)) {
      DescentSet des = descent_set(st);
      for (int i = 2; i < n; ++i) {
        ConcatTableau u = deg_concat(st, i);
        c.require(deg_concat(u, i) == st,
                  "deg_concat not an involution on SST(" + gamma.str() + " x " + delta.str() + ")");
        for (int j = i + 3; j < n; ++j)
          c.require(deg_concat(deg_concat(st, i), j) == deg_concat(deg_concat(st, j), i),
                    "deg_concat commutation fails");
      }
      if (n >= 2) {
        ConcatTableau q = queer_concat(st);
        c.require(queer_concat(q) == st, "queer_concat not an involution");
        c.require(!(q == st), "queer_concat has a fixed point");
        DescentSet qdes = descent_set(q);
        c.require(des.contains(1) != qdes.contains(1), "queer_concat does not toggle descent 1");
        for (int i = 3; i < n; ++i)
          c.require(des.contains(i) == qdes.contains(i),
                    "queer_concat moves a descent at or above 3");
        for (int i = 4; i < n; ++i)
          c.require(queer_concat(deg_concat(st, i)) == deg_concat(queer_concat(st), i),
                    "queer_concat does not commute with a high label");
      }
    }
  }
  return c.result;
}

CheckResult check_rigidity() {
  Checker c(10, "pairwise non-isomorphism and rigidity of the queer graphs through size 6");
  for (int n = 1; n <= 6; ++n) {
    auto shapes = strict_partitions_of(n);
    std::vector<DEGraph> graphs;
    for (const auto& gamma : shapes) graphs.push_back(sst_graph(gamma, true));
    for (size_t a = 0; a < graphs.size(); ++a) {
      for (size_t b = a + 1; b < graphs.size(); ++b)
        c.require(!is_descent_edge_isomorphic(graphs[a], graphs[b]),
                  "H[" + shapes[a].str() + "] isomorphic to H[" + shapes[b].str() + "]");
      auto autos = find_isomorphisms(graphs[a], graphs[a], 2);
      bool identity_only = autos.size() == 1;
      if (identity_only)
        for (const auto& [from, to] : autos[0]) identity_only &= from == to;
      c.require(identity_only, "H[" + shapes[a].str() + "] has a nontrivial automorphism");
    }
  }
  return c.result;
}

CheckResult check_enumeration() {
  Checker c(11, "family sizes against the brute-force count through size 9");
  c.require(generate_sst(StrictPartition({3, 1})).size() == 8, "SST(3,1) count is not 8");
  c.require(generate_sst(StrictPartition({4})).size() == 8, "SST(4) count is not 8");
  c.require(generate_sst(StrictPartition({4, 1})).size() == 24, "SST(4,1) count is not 24");
  c.require(generate_syt(Partition({3, 1})).size() == 3, "SYT(3,1) count is not 3");
  for (int n = 1; n <= 9; ++n)
    for (const auto& gamma : strict_partitions_of(n)) {
      long long unmarked = brute_force_unmarked_count(gamma);
      long long expected = unmarked << (n - gamma.length());
      c.require(static_cast<long long>(generate_sst(gamma).size()) == expected,
                "SST(" + gamma.str() + ") count differs from " + std::to_string(expected));
    }
  return c.result;
}

}  // namespace

std::vector<CheckResult> run_all() {
  return {check_fundamental_expansions(),
          check_schur_expansion(),
          check_reference_graphs(),
          check_connectivity_and_two_edge_bound(),
          check_axiom_audits(),
          check_negative_fixtures(),
          check_unique_extensions(),
          check_structure_constants(),
          check_involution_properties(),
          check_rigidity(),
          check_enumeration()};
}

}  // namespace qdeg::repro
