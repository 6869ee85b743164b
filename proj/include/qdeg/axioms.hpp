#pragma once

#include <string>
#include <vector>

#include "qdeg/degraph.hpp"
#include "qdeg/qsym.hpp"

namespace qdeg {

// Thrown when a class's descent multiset matches no SST family: the input
// is certified not to carry a queer dual equivalence.
struct NotQueerDEGError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AxiomFailure {
  std::string condition;               // "i", "ii" or "iii"
  std::vector<std::string> witnesses;  // vertex ids involved
  std::string explanation;
};

struct AxiomReport {
  bool pass = true;
  std::vector<AxiomFailure> failures;
  std::vector<std::string> notes;  // interpretation notes, stated up front
  std::string str() const;
};

// Audit of the dual equivalence conditions on labels {2,...,n-1}:
//   (i)  every window class h..i (0 <= i-h <= 3, h >= 2) has restricted
//        descent generating function equal to some schur_F of degree i-h+3;
//   (ii) involutions with labels three or more apart commute vertexwise.
// Labels absent from the graph act as identity involutions.
AxiomReport check_deg(const DEGraph& g);

// Audit of the queer dual equivalence conditions on labels {0, 2,...,n-1}:
// runs check_deg, then
//   (i)   for i = 1,2,3 every class under {0,2,...,i} has descent
//         generating function (descents cut to [i]) equal to some schurP_F
//         of degree i+1, forcing the queer involution to be fixed-point
//         free and to toggle 1;
//   (ii)  the queer involution commutes with every label above 3;
//   (iii) within every class under {0,2,...,k-1}, any two vertices are
//         joined by a path using at most two (k-1)-labeled edges, for
//         every k up to n.
AxiomReport check_queer_deg(const DEGraph& g);

// The unique strict partition whose SST descent multiset equals the
// class's. The class must be a full component under all labels.
StrictPartition classify_class(const std::vector<int>& cls, const DEGraph& g);

// All fixed-point-free pairings on vertices toggling membership of 1 in
// the descent set that extend the existing labeled involutions, as label
// 0, to a graph passing check_queer_deg. Degree is capped at 5.
using QueerPairing = std::vector<std::pair<std::string, std::string>>;
std::vector<QueerPairing> unique_extension_search(const DEGraph& base);

// base plus the pairing as label 0.
DEGraph with_queer_pairing(const DEGraph& base, const QueerPairing& pairing);

}  // namespace qdeg
