#pragma once

#include <map>
#include <string>

#include "qdeg/axioms.hpp"
#include "qdeg/qsym.hpp"

namespace qdeg {

// Coefficients of P_epsilon in P_gamma P_delta.
struct StructureTable {
  StrictPartition gamma, delta;
  std::map<std::vector<int>, long long> entries;  // epsilon parts -> coefficient
  friend bool operator==(const StructureTable&, const StructureTable&) = default;
};

// Fundamental expansion of P_gamma P_delta: sum of F over the descent
// sets of the concatenated tableaux. An empty factor acts as identity.
QSymF product_F(const StrictPartition& gamma, const StrictPartition& delta);

// Structure constants read off the queer components of the concatenated
// graph, each classified by descent-multiset matching.
StructureTable structure_constants(const StrictPartition& gamma, const StrictPartition& delta);

// Schur coefficients of P_gamma from the components of the graph without
// the queer involution, matched against SYT descent multisets.
BasisExpansion schur_coeffs_of_P(const StrictPartition& gamma);

// CSV rows "gamma,delta,epsilon,coefficient" with quoted shapes.
std::string to_csv(const StructureTable& t);

}  // namespace qdeg
