#include <iostream>

#include "qkdv/acceptance/acceptance.h"

int main() {
  qkdv::HamiltonianStore store;
  bool all = true;
  for (const auto& r : qkdv::run_acceptance(store, 1)) {
    std::cout << qkdv::format_result(r) << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
