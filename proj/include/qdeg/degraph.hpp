#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qdeg/tableaux.hpp"

namespace qdeg {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Labeled involution graph. Vertices are opaque ids; each label normally
// carries a partial perfect matching (an involution with fixed points
// implicit). Labels are drawn from {0} in addition to {2,...,n-1}.
// Abstract inputs may attach several same-label edges to a vertex (class
// quotients); operations needing involution semantics then refuse.
class DEGraph {
 public:
  DEGraph() = default;
  DEGraph(int degree, std::vector<std::string> ids, std::vector<DescentSet> descents);

  int degree() const { return degree_; }
  int vertex_count() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int v) const { return ids_[v]; }
  int index_of(const std::string& id) const;  // throws GraphError if absent
  const DescentSet& descent(int v) const { return des_[v]; }
  const std::set<int>& labels() const { return labels_; }

  const std::vector<int>& neighbors(int label, int v) const;
  // Partner under the label's matching: -1 when fixed; throws when the
  // label holds more than one edge at v.
  int partner(int label, int v) const;
  // Apply the label's involution (fixed points map to themselves).
  int apply(int label, int v) const;
  bool is_matching(int label) const;

  // Declare a label with no pairs (an identity involution).
  void add_label(int label);
  void add_pair(int label, int a, int b);

  // Edges as (label, a, b) with a < b, sorted.
  std::vector<std::array<int, 3>> edge_list() const;

 private:
  int degree_ = 0;
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<DescentSet> des_;
  std::set<int> labels_;
  std::map<int, std::vector<std::vector<int>>> adj_;
};

// Build the graph of a family of involutions on serialized objects.
// Each involution must map the id set into itself and be self-inverse;
// violations raise GraphError naming a witness.
DEGraph build_graph(const std::vector<std::string>& ids, const std::vector<DescentSet>& descents,
                    const std::map<int, std::function<std::string(const std::string&)>>& involutions);

// Connected components under the chosen edge labels, each sorted, listed
// by smallest member. Unknown labels raise GraphError.
std::vector<std::vector<int>> components(const DEGraph& g, const std::set<int>& labels);
std::vector<std::vector<int>> components(const DEGraph& g);

// Max over ordered vertex pairs in a common component of the minimum
// number of special-labeled edges on any connecting path (0/1-weight
// shortest paths, deque BFS). Labels absent from the graph contribute no
// edges.
int max_special_edge_need(const DEGraph& g, const std::set<int>& labels, int special);

std::map<DescentSet, int> descent_multiset(const std::vector<int>& cls, const DEGraph& g);

// Bijection preserving descent sets and every labeled edge relation.
using Isomorphism = std::map<std::string, std::string>;
std::optional<Isomorphism> find_isomorphism(const DEGraph& g, const DEGraph& h);
std::vector<Isomorphism> find_isomorphisms(const DEGraph& g, const DEGraph& h, size_t limit);
bool is_descent_edge_isomorphic(const DEGraph& g, const DEGraph& h);

// DOT rendering: one node per vertex labeled with id and descent set, one
// edge per labeled pair; 0 violet, 2 red, 3 blue, 4 magenta, others cycled.
std::string to_dot(const DEGraph& g);

// {n, vertices: [{id, des}], edges: [{label, a, b}]}
std::string to_json_string(const DEGraph& g);
DEGraph graph_from_json_string(const std::string& text);

// --- standard constructions ---

// Queer dual equivalence graph H_gamma on SST(gamma): labels 2..n-1 and,
// when queer and n >= 2, the label-0 queer involution.
DEGraph sst_graph(const StrictPartition& gamma, bool queer);
// Dual equivalence graph on SYT(lambda), labels 2..n-1.
DEGraph syt_graph(const Partition& lambda);
// Disjoint union of SYT families sharing a degree, labels 2..n-1.
DEGraph syt_union_graph(const std::vector<Partition>& shapes);
// Graph on SST(gamma (x) delta) under the concatenated involutions.
DEGraph tensor_graph(const StrictPartition& gamma, const StrictPartition& delta, bool queer);

}  // namespace qdeg
