#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qkdv/hamiltonians/record.h"

namespace qkdv {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Criteria 1-9 run on `threads` workers (results keep their order);
// criterion 10 is the wall-clock of the whole run.
std::vector<CriterionResult> run_acceptance(HamiltonianStore& store, int threads = 1);

// "[PASS] 3 commutativity: ..." on one line.
std::string format_result(const CriterionResult& r);

}  // namespace qkdv
