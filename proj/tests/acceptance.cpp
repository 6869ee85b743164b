// Integration gate: runs the full reference suite and prints one line per
// check. Exits nonzero when any check fails.
#include <cstdio>

#include "qdeg/repro.hpp"

int main() {
  bool all = true;
  for (const auto& r : qdeg::repro::run_all()) {
    std::printf("[%s] %d. %s\n", r.pass ? "PASS" : "FAIL", r.number, r.name.c_str());
    for (const auto& d : r.details) std::printf("       - %s\n", d.c_str());
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "all checks passed" : "some checks FAILED");
  return all ? 0 : 1;
}
