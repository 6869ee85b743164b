#pragma once

#include <string>
#include <vector>

#include "qdeg/degraph.hpp"

namespace qdeg::repro {

struct CheckResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::vector<std::string> details;  // failure descriptions; empty on pass
};

// The full reference suite: worked examples, small-size theorems, and
// counterexample fixtures. Runs in a few minutes of desk time.
std::vector<CheckResult> run_all();

// Counterexample fixtures, exposed for tests and for file export.
// A queer pairing on three SYT families whose restricted class doubles a
// Schur P-function.
DEGraph doubled_class_pairing();
// A queer "involution" with fixed points.
DEGraph fixed_point_pairing();
// Six restricted classes joined in a hexagon by top-label edges; some
// pairs need three of them.
DEGraph double_cover_graph();

}  // namespace qdeg::repro
