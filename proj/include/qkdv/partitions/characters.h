#pragma once

#include <string>
#include <vector>

#include "qkdv/partitions/partition.h"

namespace qkdv {

// chi_lambda(C_mu) by the Murnaghan-Nakayama rule. Memoized process-wide.
Integer character(const Partition& lambda, const Partition& mu);

struct CharacterTable {
  int k = 0;
  std::vector<Partition> order;            // canonical order, rows and columns
  std::vector<std::vector<Integer>> values;  // values[lambda][mu]
};

CharacterTable character_table(int k);
std::string character_table_csv(const CharacterTable& t);

}  // namespace qkdv
