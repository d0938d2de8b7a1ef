#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

#include "qkdv/fock/fock.h"
#include "qkdv/hamiltonians/br.h"

namespace qkdv {

inline constexpr const char* kCodeVersion = "qkdv-1.0";

struct HamiltonianRecord {
  int m = -1;
  Density density;
  std::string provenance;           // explicit | eliashberg-dispersionless | br-recursion
  std::string constant_convention;  // exact | string-equation | zero
  std::optional<FitWindow> window;  // fit window of the recursion step

  // Mode-0 operator on weight k (memoized).
  const ExactMatrix& block0(int k) const;
  OperatorBlock block(int p, int k) const { return quantize(density, p, k); }

  void seed_block0(int k, ExactMatrix m) const;

 private:
  mutable std::mutex mu_;
  mutable std::map<int, ExactMatrix> blocks_;
};

nlohmann::json density_to_json(const Density& d);
Density density_from_json(const nlohmann::json& j);
// Density, provenance, constant convention and mode-0 blocks for weights 0..max_weight.
nlohmann::json record_to_json(const HamiltonianRecord& r, int max_weight);

struct StoreOptions {
  std::optional<std::filesystem::path> cache_dir;
  bool verify_cache = false;  // recompute and require byte-identical cache hits
  int max_dispersive_m = 3;
  int cache_weight = 6;
};

// Owns every Hamiltonian built in a run. Dispersive records m >= 0 come from
// the recursion started at h_{-1} = u; h_1's mode-0 part (explicit) drives it.
class HamiltonianStore {
 public:
  explicit HamiltonianStore(StoreOptions options = {});

  const HamiltonianRecord& dispersive(int m);
  const HamiltonianRecord& dispersionless(int m);
  const HamiltonianRecord& explicit_record(int m);

  const StoreOptions& options() const { return options_; }
  // Number of cache files that were read back during this run.
  int cache_hits() const { return cache_hits_; }

 private:
  void build_chain();
  std::shared_ptr<HamiltonianRecord> through_cache(const std::string& name, std::shared_ptr<HamiltonianRecord> fresh);

  StoreOptions options_;
  std::mutex mu_;
  std::map<int, std::shared_ptr<HamiltonianRecord>> dispersive_;
  std::map<int, std::shared_ptr<HamiltonianRecord>> dispersionless_;
  std::map<int, std::shared_ptr<HamiltonianRecord>> explicit_;
  int cache_hits_ = 0;
};

struct CommuteReport {
  bool zero = true;
  std::size_t nonzero_entries = 0;
  std::size_t defect_terms = 0;
};

// [A, B] on weight k for the mode-0 blocks.
CommuteReport commute_check(const HamiltonianRecord& a, const HamiltonianRecord& b, int k);

// Default cache directory: $QKDV_CACHE if set, else nullopt.
std::optional<std::filesystem::path> cache_dir_from_env();

}  // namespace qkdv
