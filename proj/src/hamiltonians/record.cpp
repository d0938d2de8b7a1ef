#include "qkdv/hamiltonians/record.h"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qkdv/exact/json.h"
#include "qkdv/hamiltonians/densities.h"

namespace qkdv {

const ExactMatrix& HamiltonianRecord::block0(int k) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = blocks_.find(k); it != blocks_.end()) return it->second;
  }
  ExactMatrix b = quantize(density, 0, k).matrix;
  std::lock_guard lock(mu_);
  return blocks_.emplace(k, std::move(b)).first->second;
}

void HamiltonianRecord::seed_block0(int k, ExactMatrix m) const {
  std::lock_guard lock(mu_);
  blocks_.emplace(k, std::move(m));
}

nlohmann::json density_to_json(const Density& d) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : d.terms()) terms.push_back({{"orders", k}, {"coeff", poly_to_json(c)}});
  return {{"terms", terms}};
}

Density density_from_json(const nlohmann::json& j) {
  Density d;
  for (const auto& t : j.at("terms")) d += Density::monomial(t.at("orders").get<std::vector<int>>(), poly_from_json(t.at("coeff")));
  return d;
}

nlohmann::json record_to_json(const HamiltonianRecord& r, int max_weight) {
  nlohmann::json blocks = nlohmann::json::array();
  for (int k = 0; k <= max_weight; ++k) blocks.push_back(block_to_json({0, k, r.block0(k)}));
  nlohmann::json out = {{"m", r.m},
                        {"provenance", r.provenance},
                        {"constant_convention", r.constant_convention},
                        {"code_version", kCodeVersion},
                        {"density", density_to_json(r.density)},
                        {"blocks", blocks}};
  if (r.window) out["fit_window"] = {{"max_mode", r.window->max_mode}, {"max_target_weight", r.window->max_target_weight}};
  return out;
}

namespace {

std::shared_ptr<HamiltonianRecord> record_from_json(const nlohmann::json& j) {
  auto r = std::make_shared<HamiltonianRecord>();
  r->m = j.at("m").get<int>();
  r->density = density_from_json(j.at("density"));
  r->provenance = j.at("provenance").get<std::string>();
  r->constant_convention = j.at("constant_convention").get<std::string>();
  if (j.contains("fit_window")) {
    r->window = FitWindow{j["fit_window"].at("max_mode").get<int>(), j["fit_window"].at("max_target_weight").get<int>()};
  }
  for (const auto& b : j.at("blocks")) {
    OperatorBlock block = block_from_json(b);
    r->seed_block0(block.source_weight, std::move(block.matrix));
  }
  return r;
}

std::shared_ptr<HamiltonianRecord> make_record(int m, Density d, std::string provenance, std::string convention) {
  auto r = std::make_shared<HamiltonianRecord>();
  r->m = m;
  r->density = std::move(d);
  r->provenance = std::move(provenance);
  r->constant_convention = std::move(convention);
  return r;
}

}  // namespace

std::optional<std::filesystem::path> cache_dir_from_env() {
  if (const char* env = std::getenv("QKDV_CACHE"); env != nullptr && *env != '\0') return std::filesystem::path(env);
  return std::nullopt;
}

HamiltonianStore::HamiltonianStore(StoreOptions options) : options_(std::move(options)) {
  if (options_.max_dispersive_m < -1) throw Error("max dispersive index must be >= -1");
}

std::shared_ptr<HamiltonianRecord> HamiltonianStore::through_cache(const std::string& name,
                                                                   std::shared_ptr<HamiltonianRecord> fresh) {
  if (!options_.cache_dir) return fresh;
  namespace fs = std::filesystem;
  const fs::path file = *options_.cache_dir / (name + "-" + kCodeVersion + ".json");
  const std::string bytes = record_to_json(*fresh, options_.cache_weight).dump(1) + "\n";
  if (fs::exists(file)) {
    std::ifstream in(file, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string cached = ss.str();
    if (options_.verify_cache && cached != bytes) {
      throw VerificationError("cache entry " + file.string() + " differs from recomputation");
    }
    ++cache_hits_;
    try {
      return record_from_json(nlohmann::json::parse(cached));
    } catch (const std::exception& e) {
      throw Error("unreadable cache entry " + file.string() + ": " + e.what());
    }
  }
  // Insert-once: write a private temp file and move it into place.
  fs::create_directories(*options_.cache_dir);
  const fs::path tmp = file.string() + ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(fresh.get()));
  {
    std::ofstream out(tmp, std::ios::binary);
    out << bytes;
  }
  if (fs::exists(file)) {
    fs::remove(tmp);
  } else {
    fs::rename(tmp, file);
  }
  return fresh;
}

void HamiltonianStore::build_chain() {
  // Caller holds mu_.
  const int top = options_.max_dispersive_m + 1;
  const Density h1 = explicit_density(1);
  std::vector<Density> chain{Density::u()};  // chain[i] = h_{i-1}
  std::vector<FitWindow> windows{FitWindow{}};
  for (int m = -1; m < top; ++m) {
    BrResult r = br_next(chain.back(), m, h1);
    chain.push_back(std::move(r.density));
    windows.push_back(r.window);
  }
  for (int m = 0; m <= options_.max_dispersive_m; ++m) {
    Density d = chain[static_cast<std::size_t>(m + 1)];
    const ExactPoly constant = chain[static_cast<std::size_t>(m + 2)].coefficient({0});
    d += Density(constant);
    auto rec = make_record(m, std::move(d), "br-recursion", "string-equation");
    rec->window = windows[static_cast<std::size_t>(m + 1)];
    dispersive_.emplace(m, through_cache("h" + std::to_string(m) + "-br", rec));
  }
}

const HamiltonianRecord& HamiltonianStore::dispersive(int m) {
  if (m < -1 || m > options_.max_dispersive_m) {
    throw Error("dispersive Hamiltonians are available for -1 <= m <= " + std::to_string(options_.max_dispersive_m));
  }
  std::lock_guard lock(mu_);
  if (m == -1) {
    if (!dispersive_.contains(-1)) dispersive_.emplace(-1, make_record(-1, Density::u(), "explicit", "exact"));
  } else if (!dispersive_.contains(m)) {
    build_chain();
  }
  return *dispersive_.at(m);
}

const HamiltonianRecord& HamiltonianStore::dispersionless(int m) {
  if (m < -1) throw Error("dispersionless Hamiltonians start at m = -1");
  std::lock_guard lock(mu_);
  auto it = dispersionless_.find(m);
  if (it == dispersionless_.end()) {
    auto rec = make_record(m, eliashberg_density(m), "eliashberg-dispersionless", "exact");
    it = dispersionless_.emplace(m, through_cache("h" + std::to_string(m) + "-disp", rec)).first;
  }
  return *it->second;
}

const HamiltonianRecord& HamiltonianStore::explicit_record(int m) {
  std::lock_guard lock(mu_);
  auto it = explicit_.find(m);
  if (it == explicit_.end()) it = explicit_.emplace(m, make_record(m, explicit_density(m), "explicit", "exact")).first;
  return *it->second;
}

CommuteReport commute_check(const HamiltonianRecord& a, const HamiltonianRecord& b, int k) {
  const ExactMatrix& x = a.block0(k);
  const ExactMatrix& y = b.block0(k);
  const ExactMatrix c = commutator(x, y);
  CommuteReport r;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (c(i, j).is_zero()) continue;
      r.zero = false;
      ++r.nonzero_entries;
      r.defect_terms += c(i, j).size();
    }
  }
  return r;
}

}  // namespace qkdv
