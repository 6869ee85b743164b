#include "qdeg/product.hpp"

#include "qdeg/involutions.hpp"

namespace qdeg {

QSymF product_F(const StrictPartition& gamma, const StrictPartition& delta) {
  QSymF f(gamma.size() + delta.size());
  for (const auto& st : generate_tensor(gamma, delta)) f.add_term(descent_set(st), 1);
  return f;
}

StructureTable structure_constants(const StrictPartition& gamma, const StrictPartition& delta) {
  StructureTable table{gamma, delta, {}};
  int n = gamma.size() + delta.size();
  if (n == 0) return table;
  DEGraph g = tensor_graph(gamma, delta, true);

  std::vector<std::pair<StrictPartition, QSymF>> sst_table;
  for (const auto& eps : strict_partitions_of(n)) sst_table.push_back({eps, schurP_F(eps)});

  for (const auto& cls : components(g)) {
    QSymF f(n);
    for (int v : cls) f.add_term(g.descent(v), 1);
    const StrictPartition* match = nullptr;
    for (const auto& [eps, q] : sst_table)
      if (q == f) {
        match = &eps;
        break;
      }
    if (!match)
      throw NotQueerDEGError("structure_constants: a component of SST(" + gamma.str() + " (x) " +
                             delta.str() + ") matches no SST descent multiset");
    ++table.entries[match->parts()];
  }
  return table;
}

BasisExpansion schur_coeffs_of_P(const StrictPartition& gamma) {
  BasisExpansion out{Basis::schur, {}};
  int n = gamma.size();
  if (n == 0) return out;
  DEGraph g = sst_graph(gamma, false);

  std::vector<std::pair<Partition, QSymF>> syt_table;
  for (const auto& lambda : partitions_of(n)) syt_table.push_back({lambda, schur_F(lambda)});

  for (const auto& cls : components(g)) {
    QSymF f(n);
    for (int v : cls) f.add_term(g.descent(v), 1);
    const Partition* match = nullptr;
    for (const auto& [lambda, q] : syt_table)
      if (q == f) {
        match = &lambda;
        break;
      }
    if (!match)
      throw InvariantError("schur_coeffs_of_P: a component of SST(" + gamma.str() +
                           ") matches no SYT descent multiset");
    ++out.coeff[match->parts()];
  }
  return out;
}

std::string to_csv(const StructureTable& t) {
  std::string out = "gamma,delta,epsilon,coefficient\n";
  for (const auto& [eps, c] : t.entries)
    out += "\"" + t.gamma.str() + "\",\"" + t.delta.str() + "\",\"" + format_parts(eps) + "\"," +
           std::to_string(c) + "\n";
  return out;
}

}  // namespace qdeg
