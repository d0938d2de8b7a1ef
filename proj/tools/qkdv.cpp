#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qkdv/acceptance/acceptance.h"
#include "qkdv/exact/json.h"
#include "qkdv/identities/identities.h"
#include "qkdv/partitions/characters.h"
#include "qkdv/spectral/spectral.h"
#include "qkdv/yjm/yjm.h"

using namespace qkdv;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  int threads = 1;
  int weight = -1;
  int order = 8;
  int m = 1;
  int mmax = -1;
  int kmax = -1;
  int zorder = 8;
  bool dispersionless = false;
};

void check_range(const char* name, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw UsageError(std::string("--") + name + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

void check_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("--format " + c.format + " not supported here (use " + list + ")");
}

HamiltonianStore make_store(const Config& c, int max_dispersive) {
  StoreOptions o;
  if (!c.no_cache) o.cache_dir = c.cache_dir.empty() ? cache_dir_from_env() : std::filesystem::path(c.cache_dir);
  o.max_dispersive_m = max_dispersive;
  return HamiltonianStore(o);
}

std::string latex_rat(const Rat& r, bool leading) {
  std::string sign = r < 0 ? "-" : (leading ? "" : "+");
  Rat a = abs(r);
  if (a.get_den() == 1) return sign + to_string(a.get_num());
  return sign + "\\frac{" + to_string(a.get_num()) + "}{" + to_string(a.get_den()) + "}";
}

std::string latex_partition(const Partition& p) {
  if (p.length() == 0) return "\\emptyset";
  std::string out = "(";
  for (int i = 0; i < p.length(); ++i) out += (i ? "," : "") + std::to_string(p[static_cast<std::size_t>(i)]);
  return out + ")";
}

// sum_n c_n sigma^n in LaTeX.
std::string latex_sigma_series(const std::vector<Rat>& c) {
  std::string out;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] == 0) continue;
    const bool unit = abs(c[n]) == 1 && n > 0;
    std::string coeff = unit ? (c[n] < 0 ? "-" : (out.empty() ? "" : "+")) : latex_rat(c[n], out.empty());
    std::string var = n == 0 ? "" : (n == 1 ? "\\sigma" : "\\sigma^{" + std::to_string(n) + "}");
    out += coeff + var;
  }
  return out.empty() ? "0" : out;
}

std::string rat_series_text(const std::vector<Rat>& c) {
  ExactPoly p;
  for (std::size_t n = 0; n < c.size(); ++n) p += ExactPoly::variable(Var::sigma, static_cast<int>(n)) * c[n];
  return p.to_string();
}

int cmd_ham(const Config& c) {
  check_format(c, {"text", "json"});
  const int weight = c.weight < 0 ? 4 : c.weight;
  check_range("weight", weight, 0, 10);
  const int mmax = c.mmax < 0 ? 3 : c.mmax;
  check_range("mmax", mmax, -1, 3);
  check_range("m", c.m, -1, c.dispersionless ? 8 : mmax);
  auto store = make_store(c, mmax);
  const auto& rec = c.dispersionless ? store.dispersionless(c.m) : store.dispersive(c.m);
  if (c.format == "json") {
    std::cout << record_to_json(rec, weight).dump(1) << "\n";
    return 0;
  }
  std::cout << "h_" << rec.m << " = " << rec.density.to_string() << "\n";
  std::cout << "provenance: " << rec.provenance << "\nconstant convention: " << rec.constant_convention << "\n";
  std::cout << "H_" << rec.m << " on weight " << weight << " (columns = source, rows = target):\n";
  const auto& basis = enumerate_partitions(weight);
  const ExactMatrix& b = rec.block0(weight);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t col = 0; col < basis.size(); ++col) {
      if (b(r, col).is_zero()) continue;
      std::cout << "  q" << basis[r].to_string() << " <- q" << basis[col].to_string() << ": " << b(r, col).to_string() << "\n";
    }
  }
  return 0;
}

int cmd_commute(const Config& c) {
  check_format(c, {"text", "csv", "json"});
  const int kmax = c.kmax < 0 ? 6 : c.kmax;
  check_range("kmax", kmax, 0, 10);
  const int mmax = c.mmax < 0 ? 3 : c.mmax;
  check_range("mmax", mmax, -1, c.dispersionless ? 8 : 3);
  auto store = make_store(c, c.dispersionless ? 3 : mmax);
  json rows = json::array();
  bool all = true;
  if (c.format == "csv") std::cout << "k,m,n,zero,nonzero_entries\n";
  for (int k = 0; k <= kmax; ++k) {
    for (int m = -1; m <= mmax; ++m) {
      for (int n = m + 1; n <= mmax; ++n) {
        const auto& a = c.dispersionless ? store.dispersionless(m) : store.dispersive(m);
        const auto& b = c.dispersionless ? store.dispersionless(n) : store.dispersive(n);
        auto rep = commute_check(a, b, k);
        all = all && rep.zero;
        if (c.format == "csv") {
          std::cout << k << "," << m << "," << n << "," << (rep.zero ? 1 : 0) << "," << rep.nonzero_entries << "\n";
        } else if (c.format == "json") {
          rows.push_back({{"k", k}, {"m", m}, {"n", n}, {"zero", rep.zero}, {"nonzero_entries", rep.nonzero_entries}});
        } else {
          std::cout << "k=" << k << " [H_" << m << ", H_" << n << "] " << (rep.zero ? "= 0" : "!= 0") << "\n";
        }
      }
    }
  }
  if (c.format == "json") std::cout << rows.dump(1) << "\n";
  return all ? 0 : 1;
}

int cmd_eigen(const Config& c) {
  check_format(c, {"text", "csv", "json", "latex"});
  const int kmax = c.kmax < 0 ? 4 : c.kmax;
  check_range("kmax", kmax, 0, 10);
  const int mmax = c.mmax < 0 ? 2 : c.mmax;
  check_range("mmax", mmax, -1, 8);
  auto store = make_store(c, 3);
  json rows = json::array();
  if (c.format == "csv") std::cout << "m,lambda,eigenvalue\n";
  for (int m = -1; m <= mmax; ++m) {
    const auto& rec = store.dispersionless(m);
    for (int k = 0; k <= kmax; ++k) {
      const ExactMatrix& block = rec.block0(k);
      for (const auto& l : enumerate_partitions(k)) {
        // Eigenvalue read off the operator, compared with the Q_j formula.
        const auto s = schur_vector_q(l);
        const auto image = block.apply(s);
        const ExactPoly e = dispersionless_eigen(m, l)
                                .substitute(Var::V0, ExactPoly::variable(Var::U0) * ExactPoly::variable(Var::h, -1))
                                .shift(Var::h, m + 2);
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (image[j] != e * s[j]) {
            throw VerificationError("H_" + std::to_string(m) + " s_" + l.to_string() + " is not " + e.to_string() + " s");
          }
        }
        if (c.format == "csv") {
          std::cout << m << ",\"" << l.to_string() << "\"," << e.to_string() << "\n";
        } else if (c.format == "json") {
          rows.push_back({{"m", m}, {"lambda", l.to_string()}, {"eigenvalue", poly_to_json(e)}});
        } else if (c.format == "latex") {
          std::cout << "E_{" << m << "}(" << latex_partition(l) << ") &= " << e.to_string() << " \\\\\n";
        } else {
          std::cout << "m=" << m << " " << l.to_string() << ": " << e.to_string() << "\n";
        }
      }
    }
  }
  if (c.format == "json") std::cout << rows.dump(1) << "\n";
  return 0;
}

int cmd_deform(const Config& c) {
  check_format(c, {"text", "csv", "json", "latex"});
  const int weight = c.weight < 0 ? 2 : c.weight;
  check_range("weight", weight, 0, 10);
  check_range("order", c.order, 1, 12);
  auto store = make_store(c, 3);
  const int mstar = mstar_search(weight);
  if (mstar > 3) throw UsageError("weight " + std::to_string(weight) + " needs m* = " + std::to_string(mstar) + " > 3");
  const auto set = deformed_schur(store, weight, c.order, {mstar});
  json out = {{"weight", weight}, {"order", c.order}, {"mstar", mstar}, {"vectors", json::array()}};
  if (c.format == "csv") std::cout << "lambda,nu,power,coefficient\n";
  for (const auto& r : set.vectors) {
    json jv = {{"lambda", r.lambda.to_string()}, {"coefficients", json::object()}};
    std::string latex = "r_{" + latex_partition(r.lambda) + "} &= ";
    bool first = true;
    if (c.format == "text") std::cout << "r_" << r.lambda.to_string() << " (through sigma^" << c.order - 1 << "):\n";
    for (std::size_t nu = 0; nu < set.basis.size(); ++nu) {
      std::vector<Rat> series;
      for (int n = 0; n < c.order; ++n) series.push_back(r.coeffs[static_cast<std::size_t>(n)][nu]);
      bool nonzero = false;
      for (const auto& x : series) nonzero = nonzero || x != 0;
      if (!nonzero) continue;
      const std::string name = set.basis[nu].to_string();
      if (c.format == "csv") {
        for (int n = 0; n < c.order; ++n) {
          if (series[static_cast<std::size_t>(n)] != 0) {
            std::cout << "\"" << r.lambda.to_string() << "\",\"" << name << "\"," << n << "," << to_string(series[static_cast<std::size_t>(n)]) << "\n";
          }
        }
      } else if (c.format == "json") {
        json coeffs = json::array();
        for (const auto& x : series) coeffs.push_back(to_string(x));
        jv["coefficients"][name] = coeffs;
      } else if (c.format == "latex") {
        latex += (first ? "" : "+") + std::string("s_{") + latex_partition(set.basis[nu]) + "}";
        if (set.basis[nu] != r.lambda) latex += "\\left(" + latex_sigma_series(series) + "+\\cdots\\right)";
        first = false;
      } else {
        std::cout << "  s_" << name << ": " << rat_series_text(series) << "\n";
      }
    }
    if (c.format == "text") std::cout << "  F_" << mstar << " = " << r.eigen.at(mstar).to_string() << "\n";
    if (c.format == "latex") std::cout << latex << " \\\\\n";
    jv["eigenvalue_m"] = mstar;
    json ev = json::array();
    for (const auto& p : r.eigen.at(mstar).coeffs()) ev.push_back(poly_to_json(p));
    jv["eigenvalue"] = ev;
    out["vectors"].push_back(jv);
  }
  if (c.format == "json") std::cout << out.dump(1) << "\n";
  return 0;
}

int cmd_curve(const Config& c) {
  check_format(c, {"text", "json", "latex"});
  const int weight = c.weight < 0 ? 2 : c.weight;
  check_range("weight", weight, 0, 10);
  check_range("m", c.m, -1, 3);
  auto store = make_store(c, 3);
  const auto curve = spectral_curve(store, weight, c.m);
  // Coefficient table: (sigma power, rho power) -> rational.
  std::vector<std::tuple<int, int, Rat>> table;
  for (int j = curve.poly.degree(Var::rho); j >= 0; --j) {
    const ExactPoly cj = curve.poly.coefficient(Var::rho, j);
    for (int i = 0; i <= cj.degree(Var::sigma); ++i) {
      const ExactPoly cij = cj.coefficient(Var::sigma, i);
      if (!cij.is_zero()) table.emplace_back(i, j, cij.constant_term());
    }
  }
  if (c.format == "json") {
    json t = json::array();
    for (const auto& [i, j, v] : table) t.push_back({{"sigma", i}, {"rho", j}, {"coefficient", to_string(v)}});
    std::cout << json{{"weight", weight}, {"m", c.m}, {"poly", poly_to_json(curve.poly)}, {"table", t}}.dump(1) << "\n";
  } else if (c.format == "latex") {
    std::string out;
    for (const auto& [i, j, v] : table) {
      std::string mono;
      if (i > 0) mono += i == 1 ? "\\sigma" : "\\sigma^{" + std::to_string(i) + "}";
      if (j > 0) mono += j == 1 ? "\\rho" : "\\rho^{" + std::to_string(j) + "}";
      const bool unit = abs(v) == 1 && !mono.empty();
      out += unit ? (v < 0 ? "-" : (out.empty() ? "" : "+")) : latex_rat(v, out.empty());
      out += mono;
    }
    std::cout << "\\det(\\rho-K_{" << c.m << "}(\\sigma))|_{\\Lambda_{" << weight << "}} = " << out << "\n";
  } else {
    std::cout << "det(rho - K_" << c.m << "(sigma)) on weight " << weight << ":\n" << curve.poly.to_string() << "\n";
    std::cout << "sigma_power rho_power coefficient\n";
    for (const auto& [i, j, v] : table) std::cout << i << " " << j << " " << to_string(v) << "\n";
  }
  return 0;
}

int cmd_genus(const Config& c) {
  check_format(c, {"text", "csv", "json"});
  const int kmax = c.kmax < 0 ? 10 : c.kmax;
  check_range("kmax", kmax, 0, 30);
  if (c.format == "csv") std::cout << "k,rhs\n";
  json rows = json::array();
  for (int k = 0; k <= kmax; ++k) {
    const long v = conjecture_rhs(k);
    if (c.format == "csv") {
      std::cout << k << "," << v << "\n";
    } else if (c.format == "json") {
      rows.push_back({{"k", k}, {"rhs", v}});
    } else {
      std::cout << (k ? " " : "") << v;
    }
  }
  if (c.format == "text") std::cout << "\n";
  if (c.format == "json") std::cout << rows.dump(1) << "\n";
  return 0;
}

int cmd_identities(const Config& c) {
  check_format(c, {"text", "csv", "json"});
  const int kmax = c.kmax < 0 ? 8 : c.kmax;
  check_range("kmax", kmax, 1, 10);
  auto store = make_store(c, 3);
  json rows = json::array();
  if (c.format == "csv") std::cout << "k,lambda,mu,value,lemma\n";
  for (const auto& p : find_p2_pairs(kmax)) {
    const Integer value = verify_corollary(p);
    const ExactPoly lemma = verify_lemma34(p, store.dispersive(1));
    if (c.format == "csv") {
      std::cout << p.k << ",\"" << p.lambda.to_string() << "\",\"" << p.mu.to_string() << "\"," << to_string(value) << ","
                << lemma.to_string() << "\n";
    } else if (c.format == "json") {
      rows.push_back({{"k", p.k},
                      {"lambda", p.lambda.to_string()},
                      {"mu", p.mu.to_string()},
                      {"P2", to_string(p.shared_invariant)},
                      {"value", to_string(value)},
                      {"lemma", poly_to_json(lemma)}});
    } else {
      std::cout << "k=" << p.k << " " << p.lambda.to_string() << " " << p.mu.to_string() << " P2=" << to_string(p.shared_invariant)
                << " sum=" << to_string(value) << " lemma=" << lemma.to_string() << "\n";
    }
  }
  if (c.format == "json") std::cout << rows.dump(1) << "\n";
  return 0;
}

int cmd_yjm(const Config& c) {
  check_format(c, {"text", "json"});
  const int weight = c.weight < 0 ? 4 : c.weight;
  check_range("weight", weight, 0, 8);
  check_range("zorder", c.zorder, 0, 10);
  auto store = make_store(c, 3);
  const auto route = weight <= 6 ? PropA1Route::brute : PropA1Route::eigen;
  const auto rep = verify_propA1(store, weight, c.zorder, route);
  const char* route_name = route == PropA1Route::brute ? "group-algebra" : "content-eigenvalues";
  const char* convention = "content = column - row; J_i^0 = identity (J_1^0 included)";
  if (c.format == "json") {
    json eig = json::object();
    for (const auto& l : enumerate_partitions(weight)) {
      json row = json::array();
      for (int m = 0; m <= c.zorder; ++m) row.push_back(to_string(yjm_eigen(l, m)));
      eig[l.to_string()] = row;
    }
    std::cout << json{{"weight", weight},
                      {"zorder", c.zorder},
                      {"route", route_name},
                      {"convention", convention},
                      {"defect_entries", rep.defect_entries},
                      {"content_power_sums", eig}}
                     .dump(1)
              << "\n";
  } else {
    std::cout << "convention: " << convention << "\n";
    std::cout << "content power sums p_m(lambda), m = 0.." << c.zorder << ":\n";
    for (const auto& l : enumerate_partitions(weight)) {
      std::cout << "  " << l.to_string() << ":";
      for (int m = 0; m <= c.zorder; ++m) std::cout << " " << to_string(yjm_eigen(l, m));
      std::cout << "\n";
    }
    std::cout << "generating identity through z^" << c.zorder << " (" << route_name << "): "
              << (rep.zero() ? "zero defect" : std::to_string(rep.defect_entries) + " nonzero defect entries") << "\n";
  }
  return rep.zero() ? 0 : 1;
}

int cmd_chars(const Config& c) {
  check_format(c, {"text", "csv", "json"});
  const int weight = c.weight < 0 ? 4 : c.weight;
  check_range("weight", weight, 0, 10);
  const auto t = character_table(weight);
  if (c.format == "json") {
    json rows = json::object();
    for (std::size_t i = 0; i < t.order.size(); ++i) {
      json row = json::array();
      for (const auto& v : t.values[i]) row.push_back(to_string(v));
      rows[t.order[i].to_string()] = row;
    }
    json classes = json::array();
    for (const auto& mu : t.order) classes.push_back(mu.to_string());
    std::cout << json{{"weight", weight}, {"classes", classes}, {"characters", rows}}.dump(1) << "\n";
  } else {
    std::cout << character_table_csv(t);
  }
  return 0;
}

int cmd_selftest(const Config& c) {
  check_format(c, {"text"});
  check_range("threads", c.threads, 1, 64);
  StoreOptions o;
  if (!c.no_cache) o.cache_dir = c.cache_dir.empty() ? cache_dir_from_env() : std::filesystem::path(c.cache_dir);
  o.verify_cache = true;
  HamiltonianStore store(o);
  bool all = true;
  for (const auto& r : run_acceptance(store, c.threads)) {
    std::cout << format_result(r) << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qkdv: exact computations for quantum KdV Hamiltonians"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv", "latex"}));
  app.add_option("--cache-dir", c.cache_dir, "Hamiltonian cache directory (default: $QKDV_CACHE)");
  app.add_flag("--no-cache", c.no_cache, "Do not read or write the cache");
  app.add_option("--threads", c.threads, "Worker threads");

  auto add = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto* ham = add("ham", "Build a Hamiltonian record and print its density and weight block");
  ham->add_option("--m", c.m, "Hamiltonian index");
  ham->add_option("--weight", c.weight, "Weight of the printed block");
  ham->add_option("--mmax", c.mmax, "Largest dispersive index to construct");
  ham->add_flag("--dispersionless", c.dispersionless, "Use the dispersionless tower");
  auto* commute = add("commute", "Check [H_m, H_n] = 0 on weights <= kmax");
  commute->add_option("--mmax", c.mmax, "Largest index");
  commute->add_option("--kmax", c.kmax, "Largest weight");
  commute->add_flag("--dispersionless", c.dispersionless, "Use the dispersionless tower");
  auto* eigen = add("eigen", "Dispersionless eigenvalues on Schur functions");
  eigen->add_option("--mmax", c.mmax, "Largest index");
  eigen->add_option("--kmax", c.kmax, "Largest weight");
  auto* deform = add("deform", "Deformed Schur functions as series in sigma");
  deform->add_option("--weight", c.weight, "Weight");
  deform->add_option("--order", c.order, "Number of sigma coefficients");
  auto* curve = add("curve", "Spectral curve det(rho - K_m(sigma))");
  curve->add_option("--weight", c.weight, "Weight");
  curve->add_option("--m", c.m, "Hamiltonian index");
  auto* genus = add("genus-rhs", "(k-1)p(k) + 1 - sum of lengths");
  genus->add_option("--kmax", c.kmax, "Largest weight");
  auto* ids = add("identities", "Character sums over P2-degenerate pairs");
  ids->add_option("--kmax", c.kmax, "Largest weight");
  auto* yjm = add("yjm", "YJM content power sums and the generating identity");
  yjm->add_option("--weight", c.weight, "Weight");
  yjm->add_option("--zorder", c.zorder, "Highest power of z");
  auto* chars = add("chars", "Character table of S_k");
  chars->add_option("--weight", c.weight, "Weight");
  auto* selftest = add("selftest", "Run the acceptance suite");
  selftest->add_option("--threads", c.threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ham) return cmd_ham(c);
    if (*commute) return cmd_commute(c);
    if (*eigen) return cmd_eigen(c);
    if (*deform) return cmd_deform(c);
    if (*curve) return cmd_curve(c);
    if (*genus) return cmd_genus(c);
    if (*ids) return cmd_identities(c);
    if (*yjm) return cmd_yjm(c);
    if (*chars) return cmd_chars(c);
    if (*selftest) return cmd_selftest(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
