#include "qdeg/axioms.hpp"

#include <algorithm>

namespace qdeg {

std::string AxiomReport::str() const {
  std::string out;
  for (const auto& note : notes) out += "note: " + note + "\n";
  if (pass) return out + "PASS\n";
  out += "FAIL (" + std::to_string(failures.size()) + " condition violations)\n";
  for (const auto& f : failures) {
    out += "  condition (" + f.condition + "): " + f.explanation + "\n";
    if (!f.witnesses.empty()) {
      out += "    witnesses:";
      for (const auto& w : f.witnesses) out += " " + w;
      out += "\n";
    }
  }
  return out;
}

namespace {

const char* kWindowNote =
    "window condition read with lower index h >= 2, the smallest index an elementary "
    "involution carries";
const char* kTwoEdgeNote =
    "two-edge condition checked for classes under {0,2,...,k-1} with special label k-1, "
    "for every k up to and including the degree";

// Components over the requested labels, silently treating labels the graph
// does not carry as identity involutions.
std::vector<std::vector<int>> tolerant_components(const DEGraph& g, const std::set<int>& labels) {
  std::set<int> present;
  for (int l : labels)
    if (g.labels().count(l)) present.insert(l);
  return components(g, present);
}

std::vector<std::string> witness_ids(const DEGraph& g, const std::vector<int>& cls, size_t cap = 4) {
  std::vector<std::string> out;
  for (int v : cls) {
    if (out.size() == cap) break;
    out.push_back(g.id(v));
  }
  return out;
}

QSymF window_function(const DEGraph& g, const std::vector<int>& cls, int lo, int hi) {
  QSymF f(hi - lo + 1);
  for (int v : cls) f.add_term(g.descent(v).restricted(lo, hi), 1);
  return f;
}

// Describe a mismatching class function; when it decomposes integrally in
// the requested basis, say so (e.g. "equals 2 P[2,1]").
std::string describe_mismatch(const QSymF& f, Basis basis) {
  std::string out = "generating function " + f.str();
  try {
    BasisExpansion e = decompose(f, basis);
    out += " (equals";
    for (const auto& [shape, c] : e.coeff) {
      out += " ";
      if (c != 1) out += std::to_string(c) + " ";
      out += (basis == Basis::schur ? "s[" : "P[") + format_parts(shape) + "]";
    }
    out += ")";
  } catch (const NotInSpanError&) {
    out += " (not in the " + basis_name(basis) + " span)";
  }
  return out;
}

void check_commutation(const DEGraph& g, int a, int b, AxiomReport& report,
                       const std::string& condition) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.apply(a, g.apply(b, v)) != g.apply(b, g.apply(a, v))) {
      report.pass = false;
      report.failures.push_back(
          {condition,
           {g.id(v)},
           "labels " + std::to_string(a) + " and " + std::to_string(b) + " do not commute at " +
               g.id(v)});
      return;  // one witness per label pair keeps reports readable
    }
  }
}

}  // namespace

AxiomReport check_deg(const DEGraph& g) {
  AxiomReport report;
  report.notes.push_back(kWindowNote);
  int n = g.degree();

  // (i) window classes carry Schur functions
  for (int h = 2; h <= n - 1; ++h) {
    for (int i = h; i <= std::min(h + 3, n - 1); ++i) {
      std::set<int> window;
      for (int l = h; l <= i; ++l) window.insert(l);
      int deg = i - h + 3;
      std::vector<std::pair<Partition, QSymF>> table;
      for (const auto& lambda : partitions_of(deg)) table.push_back({lambda, schur_F(lambda)});
      for (const auto& cls : tolerant_components(g, window)) {
        QSymF f = window_function(g, cls, h - 1, i + 1);
        bool matched = false;
        for (const auto& [lambda, q] : table)
          if (q == f) {
            matched = true;
            break;
          }
        if (!matched) {
          report.pass = false;
          report.failures.push_back(
              {"i", witness_ids(g, cls),
               "window h=" + std::to_string(h) + ", i=" + std::to_string(i) +
                   ": class of size " + std::to_string(cls.size()) + " has " +
                   describe_mismatch(f, Basis::schur) + ", matching no Schur function of degree " +
                   std::to_string(deg)});
        }
      }
    }
  }

  // (ii) far-apart labels commute
  for (int a = 2; a <= n - 1; ++a)
    for (int b = a + 3; b <= n - 1; ++b) {
      if (!g.labels().count(a) || !g.labels().count(b)) continue;
      check_commutation(g, a, b, report, "ii");
    }

  return report;
}

AxiomReport check_queer_deg(const DEGraph& g) {
  AxiomReport report = check_deg(g);
  report.notes.push_back(kTwoEdgeNote);
  int n = g.degree();

  // (i) classes under {0,2,...,i} carry Schur P-functions, i = 1,2,3
  for (int i = 1; i <= std::min(3, n - 1); ++i) {
    std::set<int> labels{0};
    for (int l = 2; l <= i; ++l) labels.insert(l);
    int deg = i + 1;
    std::vector<std::pair<StrictPartition, QSymF>> table;
    for (const auto& gamma : strict_partitions_of(deg)) table.push_back({gamma, schurP_F(gamma)});
    for (const auto& cls : tolerant_components(g, labels)) {
      if (i == 1 && cls.size() == 1) {
        report.pass = false;
        report.failures.push_back({"i",
                                   {g.id(cls[0])},
                                   "the queer involution fixes " + g.id(cls[0]) +
                                       "; it is forced to be fixed-point-free"});
        continue;
      }
      QSymF f = window_function(g, cls, 1, i + 1);
      bool matched = false;
      for (const auto& [gamma, q] : table)
        if (q == f) {
          matched = true;
          break;
        }
      if (!matched) {
        report.pass = false;
        report.failures.push_back(
            {"i", witness_ids(g, cls),
             "queer window i=" + std::to_string(i) + ": class of size " +
                 std::to_string(cls.size()) + " has " + describe_mismatch(f, Basis::schur_p) +
                 ", matching no Schur P-function of degree " + std::to_string(deg)});
      }
    }
  }

  // (ii) the queer involution commutes with labels above 3
  if (g.labels().count(0)) {
    for (int b = 4; b <= n - 1; ++b) {
      if (!g.labels().count(b)) continue;
      check_commutation(g, 0, b, report, "ii");
    }
  }

  // (iii) at most two special edges needed within each class
  for (int k = 3; k <= n; ++k) {
    std::set<int> labels{0};
    for (int l = 2; l <= k - 1; ++l) labels.insert(l);
    int special = k - 1;
    if (!g.labels().count(special)) continue;
    int need = max_special_edge_need(g, labels, special);
    if (need > 2) {
      report.pass = false;
      report.failures.push_back(
          {"iii",
           {},
           "classes under labels {0,2,...," + std::to_string(k - 1) + "} need " +
               std::to_string(need) + " > 2 edges of label " + std::to_string(special) +
               " on some connecting path"});
    }
  }

  return report;
}

StrictPartition classify_class(const std::vector<int>& cls, const DEGraph& g) {
  QSymF f(g.degree());
  for (int v : cls) f.add_term(g.descent(v), 1);
  for (const auto& delta : strict_partitions_of(g.degree()))
    if (schurP_F(delta) == f) return delta;
  throw NotQueerDEGError("classify_class: class " + describe_mismatch(f, Basis::schur_p) +
                         " matches no SST descent multiset; the graph is not a queer dual "
                         "equivalence");
}

DEGraph with_queer_pairing(const DEGraph& base, const QueerPairing& pairing) {
  DEGraph g = base;
  g.add_label(0);
  for (const auto& [a, b] : pairing) g.add_pair(0, g.index_of(a), g.index_of(b));
  return g;
}

namespace {

struct SearchState {
  const DEGraph& base;
  std::vector<int> ones;    // vertices with 1 in Des
  std::vector<int> zeros;   // vertices without
  std::vector<int> match;   // vertex -> partner under the candidate pairing, -1 if open
  std::vector<QueerPairing> found;

  explicit SearchState(const DEGraph& g) : base(g), match(g.vertex_count(), -1) {}

  // Restricted class function check once the {0,2}-orbit of v closes.
  bool orbit_plausible(int v) {
    if (base.degree() < 3) return true;
    std::vector<int> orbit;
    std::vector<int> stack{v};
    std::set<int> seen{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      orbit.push_back(u);
      if (match[u] == -1) return true;  // still open; defer the check
      for (int w : {match[u], base.labels().count(2) ? base.apply(2, u) : u}) {
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
    QSymF f(3);
    for (int u : orbit) f.add_term(base.descent(u).restricted(1, 3), 1);
    for (const auto& gamma : strict_partitions_of(3))
      if (schurP_F(gamma) == f) return true;
    return false;
  }

  void extend(size_t next_one) {
    while (next_one < ones.size() && match[ones[next_one]] != -1) ++next_one;
    if (next_one == ones.size()) {
      QueerPairing pairing;
      for (int v : ones) {
        const std::string &a = base.id(v), &b = base.id(match[v]);
        pairing.push_back(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
      }
      std::sort(pairing.begin(), pairing.end());
      if (check_queer_deg(with_queer_pairing(base, pairing)).pass)
        found.push_back(std::move(pairing));
      return;
    }
    int u = ones[next_one];
    for (int v : zeros) {
      if (match[v] != -1) continue;
      // descents at 3 and above must be preserved by the queer involution
      if ((base.descent(u).mask() >> 2) != (base.descent(v).mask() >> 2)) continue;
      match[u] = v;
      match[v] = u;
      if (orbit_plausible(u)) extend(next_one + 1);
      match[u] = -1;
      match[v] = -1;
    }
  }
};

}  // namespace

std::vector<QueerPairing> unique_extension_search(const DEGraph& base) {
  if (base.degree() > 5)
    throw CapacityError("unique_extension_search: degree capped at 5 (exponential search)");
  SearchState state(base);
  for (int v = 0; v < base.vertex_count(); ++v) {
    if (base.descent(v).contains(1))
      state.ones.push_back(v);
    else
      state.zeros.push_back(v);
  }
  if (state.ones.size() != state.zeros.size()) return {};
  state.extend(0);
  std::sort(state.found.begin(), state.found.end());
  return state.found;
}

}  // namespace qdeg
