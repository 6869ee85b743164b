#include "qdeg/degraph.hpp"

#include <algorithm>
#include <deque>

#include "json.hpp"

#include "qdeg/involutions.hpp"

namespace qdeg {

DEGraph::DEGraph(int degree, std::vector<std::string> ids, std::vector<DescentSet> descents)
    : degree_(degree), ids_(std::move(ids)), des_(std::move(descents)) {
  if (ids_.size() != des_.size())
    throw GraphError("graph: vertex and descent counts differ");
  for (size_t v = 0; v < ids_.size(); ++v) {
    if (!index_.emplace(ids_[v], static_cast<int>(v)).second)
      throw GraphError("graph: duplicate vertex id " + ids_[v]);
    if (des_[v].degree() != degree_)
      throw GraphError("graph: descent degree mismatch at " + ids_[v]);
  }
}

int DEGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw GraphError("graph: unknown vertex id " + id);
  return it->second;
}

const std::vector<int>& DEGraph::neighbors(int label, int v) const {
  auto it = adj_.find(label);
  if (it == adj_.end()) throw GraphError("graph: unknown label " + std::to_string(label));
  return it->second[v];
}

int DEGraph::partner(int label, int v) const {
  const auto& nb = neighbors(label, v);
  if (nb.empty()) return -1;
  if (nb.size() > 1)
    throw GraphError("graph: label " + std::to_string(label) + " is not a matching at " + ids_[v]);
  return nb[0];
}

int DEGraph::apply(int label, int v) const {
  int u = partner(label, v);
  return u < 0 ? v : u;
}

bool DEGraph::is_matching(int label) const {
  auto it = adj_.find(label);
  if (it == adj_.end()) return true;
  for (const auto& nb : it->second)
    if (nb.size() > 1) return false;
  return true;
}

void DEGraph::add_label(int label) {
  labels_.insert(label);
  adj_.try_emplace(label, std::vector<std::vector<int>>(ids_.size()));
}

void DEGraph::add_pair(int label, int a, int b) {
  add_label(label);
  if (a == b) throw GraphError("graph: a matched pair needs two distinct vertices");
  auto& nb = adj_[label];
  if (std::find(nb[a].begin(), nb[a].end(), b) != nb[a].end())
    throw GraphError("graph: duplicate edge " + ids_[a] + " -- " + ids_[b] + " with label " +
                     std::to_string(label));
  nb[a].push_back(b);
  nb[b].push_back(a);
}

std::vector<std::array<int, 3>> DEGraph::edge_list() const {
  std::vector<std::array<int, 3>> out;
  for (const auto& [label, nb] : adj_)
    for (int v = 0; v < static_cast<int>(nb.size()); ++v)
      for (int u : nb[v])
        if (u > v) out.push_back({label, v, u});
  std::sort(out.begin(), out.end());
  return out;
}

DEGraph build_graph(
    const std::vector<std::string>& ids, const std::vector<DescentSet>& descents,
    const std::map<int, std::function<std::string(const std::string&)>>& involutions) {
  int degree = descents.empty() ? 1 : descents.front().degree();
  DEGraph g(degree, ids, descents);
  for (const auto& [label, fn] : involutions) {
    g.add_label(label);
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::string image = fn(g.id(v));
      if (image == g.id(v)) continue;
      int u;
      try {
        u = g.index_of(image);
      } catch (const GraphError&) {
        throw GraphError("graph: involution " + std::to_string(label) + " maps " + g.id(v) +
                         " outside the vertex set, to " + image);
      }
      if (fn(image) != g.id(v))
        throw GraphError("graph: involution " + std::to_string(label) + " is not self-inverse at " +
                         g.id(v));
      if (g.partner(label, v) == -1) g.add_pair(label, v, u);
    }
  }
  return g;
}

namespace {

std::vector<std::vector<int>> components_impl(const DEGraph& g, const std::set<int>& labels) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (comp[start] != -1) continue;
    std::vector<int> cls;
    std::deque<int> queue{start};
    comp[start] = static_cast<int>(out.size());
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      cls.push_back(v);
      for (int label : labels)
        for (int u : g.neighbors(label, v))
          if (comp[u] == -1) {
            comp[u] = comp[start];
            queue.push_back(u);
          }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::set<int> known_labels(const DEGraph& g, const std::set<int>& labels) {
  std::set<int> out;
  for (int l : labels)
    if (g.labels().count(l)) out.insert(l);
  return out;
}

}  // namespace

std::vector<std::vector<int>> components(const DEGraph& g, const std::set<int>& labels) {
  for (int l : labels)
    if (!g.labels().count(l)) throw GraphError("components: unknown label " + std::to_string(l));
  return components_impl(g, labels);
}

std::vector<std::vector<int>> components(const DEGraph& g) {
  return components_impl(g, g.labels());
}

int max_special_edge_need(const DEGraph& g, const std::set<int>& labels, int special) {
  std::set<int> present = known_labels(g, labels);
  int overall = 0;
  std::vector<int> dist(g.vertex_count());
  for (int source = 0; source < g.vertex_count(); ++source) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int label : present) {
        int w = (label == special) ? 1 : 0;
        for (int u : g.neighbors(label, v)) {
          if (dist[u] == -1 || dist[v] + w < dist[u]) {
            dist[u] = dist[v] + w;
            if (w == 0)
              queue.push_front(u);
            else
              queue.push_back(u);
          }
        }
      }
    }
    for (int v = 0; v < g.vertex_count(); ++v) overall = std::max(overall, dist[v]);
  }
  return overall;
}

std::map<DescentSet, int> descent_multiset(const std::vector<int>& cls, const DEGraph& g) {
  std::map<DescentSet, int> out;
  for (int v : cls) ++out[g.descent(v)];
  return out;
}

namespace {

// Signature refinement for the isomorphism search: descent set plus the
// per-label edge degrees.
using Signature = std::pair<DescentSet, std::vector<std::pair<int, int>>>;

Signature signature_of(const DEGraph& g, const std::set<int>& labels, int v) {
  std::vector<std::pair<int, int>> degs;
  for (int l : labels) {
    int d = g.labels().count(l) ? static_cast<int>(g.neighbors(l, v).size()) : 0;
    if (d > 0) degs.push_back({l, d});
  }
  return {g.descent(v), degs};
}

bool edge_consistent(const DEGraph& g, const DEGraph& h, const std::set<int>& labels,
                     const std::vector<int>& mapping, int v, int w) {
  for (int l : labels) {
    if (!g.labels().count(l)) continue;
    for (int u : g.neighbors(l, v)) {
      if (mapping[u] == -1) continue;
      if (!h.labels().count(l)) return false;
      const auto& hn = h.neighbors(l, w);
      if (std::find(hn.begin(), hn.end(), mapping[u]) == hn.end()) return false;
    }
  }
  return true;
}

void isomorphism_search(const DEGraph& g, const DEGraph& h, const std::set<int>& labels,
                        std::vector<int>& mapping, std::vector<bool>& used, size_t pos,
                        const std::vector<int>& order,
                        const std::map<Signature, std::vector<int>>& candidates_by_sig,
                        std::vector<Isomorphism>& out, size_t limit) {
  if (out.size() >= limit) return;
  if (pos == order.size()) {
    Isomorphism iso;
    for (int v = 0; v < g.vertex_count(); ++v) iso[g.id(v)] = h.id(mapping[v]);
    out.push_back(std::move(iso));
    return;
  }
  int v = order[pos];
  auto sig_it = candidates_by_sig.find(signature_of(g, labels, v));
  if (sig_it == candidates_by_sig.end()) return;
  for (int w : sig_it->second) {
    if (used[w]) continue;
    if (!edge_consistent(g, h, labels, mapping, v, w)) continue;
    mapping[v] = w;
    used[w] = true;
    isomorphism_search(g, h, labels, mapping, used, pos + 1, order, candidates_by_sig, out, limit);
    mapping[v] = -1;
    used[w] = false;
    if (out.size() >= limit) return;
  }
}

}  // namespace

std::vector<Isomorphism> find_isomorphisms(const DEGraph& g, const DEGraph& h, size_t limit) {
  if (g.degree() != h.degree())
    throw std::invalid_argument("isomorphism: graphs must have equal degrees");
  if (g.vertex_count() != h.vertex_count()) return {};
  std::set<int> labels = g.labels();
  labels.insert(h.labels().begin(), h.labels().end());

  std::map<Signature, std::vector<int>> candidates_by_sig;
  for (int w = 0; w < h.vertex_count(); ++w)
    candidates_by_sig[signature_of(h, labels, w)].push_back(w);

  // most-constrained first
  std::vector<int> order(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto ca = candidates_by_sig.find(signature_of(g, labels, a));
    auto cb = candidates_by_sig.find(signature_of(g, labels, b));
    size_t na = ca == candidates_by_sig.end() ? 0 : ca->second.size();
    size_t nb = cb == candidates_by_sig.end() ? 0 : cb->second.size();
    return na != nb ? na < nb : a < b;
  });

  std::vector<Isomorphism> out;
  std::vector<int> mapping(g.vertex_count(), -1);
  std::vector<bool> used(h.vertex_count(), false);
  isomorphism_search(g, h, labels, mapping, used, 0, order, candidates_by_sig, out, limit);
  return out;
}

std::optional<Isomorphism> find_isomorphism(const DEGraph& g, const DEGraph& h) {
  auto all = find_isomorphisms(g, h, 1);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool is_descent_edge_isomorphic(const DEGraph& g, const DEGraph& h) {
  return find_isomorphism(g, h).has_value();
}

namespace {

std::string label_color(int label) {
  switch (label) {
    case 0: return "violet";
    case 2: return "red";
    case 3: return "blue";
    case 4: return "magenta";
    default: {
      static const char* cycle[] = {"orange", "green", "cyan", "brown"};
      return cycle[(label - 5) % 4];
    }
  }
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const DEGraph& g) {
  if (g.vertex_count() == 0) return "graph {}\n";
  std::string out = "graph {\n  node [shape=box];\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out += "  " + dot_quote(g.id(v)) +
           " [label=" + dot_quote(g.id(v) + "\\n" + g.descent(v).str()) + "];\n";
  for (const auto& [label, a, b] : g.edge_list())
    out += "  " + dot_quote(g.id(a)) + " -- " + dot_quote(g.id(b)) + " [label=\"" +
           std::to_string(label) + "\", color=\"" + label_color(label) + "\"];\n";
  return out + "}\n";
}

std::string to_json_string(const DEGraph& g) {
  nlohmann::json j;
  j["n"] = g.degree();
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    j["vertices"].push_back({{"id", g.id(v)}, {"des", g.descent(v).members()}});
  j["edges"] = nlohmann::json::array();
  for (const auto& [label, a, b] : g.edge_list())
    j["edges"].push_back({{"label", label}, {"a", g.id(a)}, {"b", g.id(b)}});
  return j.dump(2);
}

DEGraph graph_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("graph: malformed JSON: ") + e.what());
  }
  try {
    int n = j.at("n").get<int>();
    std::vector<std::string> ids;
    std::vector<DescentSet> des;
    for (const auto& v : j.at("vertices")) {
      ids.push_back(v.at("id").get<std::string>());
      des.push_back(DescentSet::from_members(n, v.at("des").get<std::vector<int>>()));
    }
    DEGraph g(n, std::move(ids), std::move(des));
    for (const auto& e : j.at("edges"))
      g.add_pair(e.at("label").get<int>(), g.index_of(e.at("a").get<std::string>()),
                 g.index_of(e.at("b").get<std::string>()));
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("graph: schema violation: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw GraphError(std::string("graph: schema violation: ") + e.what());
  }
}

// --- standard constructions ---

DEGraph sst_graph(const StrictPartition& gamma, bool queer) {
  auto family = generate_sst(gamma);
  std::vector<std::string> ids;
  std::vector<DescentSet> des;
  for (const auto& s : family) {
    ids.push_back(format(s));
    des.push_back(descent_set(s));
  }
  int n = gamma.size();
  std::map<int, std::function<std::string(const std::string&)>> invs;
  for (int i = 2; i < n; ++i)
    invs[i] = [i](const std::string& id) { return format(deg_sst(parse_sst(id), i)); };
  if (queer && n >= 2)
    invs[0] = [](const std::string& id) { return format(queer_sst(parse_sst(id))); };
  return build_graph(ids, des, invs);
}

DEGraph syt_graph(const Partition& lambda) { return syt_union_graph({lambda}); }

DEGraph syt_union_graph(const std::vector<Partition>& shapes) {
  std::vector<std::string> ids;
  std::vector<DescentSet> des;
  int n = shapes.empty() ? 1 : shapes.front().size();
  for (const auto& lambda : shapes) {
    if (lambda.size() != n)
      throw std::invalid_argument("syt_union_graph: shapes must share one size");
    for (const auto& t : generate_syt(lambda)) {
      ids.push_back(format(t));
      des.push_back(descent_set(t));
    }
  }
  std::map<int, std::function<std::string(const std::string&)>> invs;
  for (int i = 2; i < n; ++i)
    invs[i] = [i](const std::string& id) { return format(deg_syt(parse_syt(id), i)); };
  return build_graph(ids, des, invs);
}

DEGraph tensor_graph(const StrictPartition& gamma, const StrictPartition& delta, bool queer) {
  auto family = generate_tensor(gamma, delta);
  std::vector<std::string> ids;
  std::vector<DescentSet> des;
  for (const auto& st : family) {
    ids.push_back(format(st));
    des.push_back(descent_set(st));
  }
  int n = gamma.size() + delta.size();
  std::map<int, std::function<std::string(const std::string&)>> invs;
  for (int i = 2; i < n; ++i)
    invs[i] = [i](const std::string& id) { return format(deg_concat(parse_tensor(id), i)); };
  if (queer && n >= 2)
    invs[0] = [](const std::string& id) { return format(queer_concat(parse_tensor(id))); };
  return build_graph(ids, des, invs);
}

}  // namespace qdeg
