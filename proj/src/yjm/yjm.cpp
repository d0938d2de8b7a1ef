#include "qkdv/yjm/yjm.h"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

#include "qkdv/partitions/characters.h"
#include "qkdv/spectral/spectral.h"

namespace qkdv {

namespace {

constexpr int kMaxGroupWeight = 7;

struct GroupTable {
  std::vector<std::vector<int>> perms;
  std::vector<std::size_t> rank_of_code;  // code = base-k digits
  std::vector<std::size_t> class_of;      // canonical partition index per rank
};

std::size_t code(const std::vector<int>& p, int k) {
  std::size_t c = 0;
  for (int x : p) c = c * static_cast<std::size_t>(k) + static_cast<std::size_t>(x);
  return c;
}

const GroupTable& table(int k) {
  if (k < 0 || k > kMaxGroupWeight) throw Error("group algebra supported for 0 <= k <= " + std::to_string(kMaxGroupWeight));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GroupTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[k];
  if (slot) return *slot;
  auto t = std::make_unique<GroupTable>();
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::size_t codes = 1;
  for (int i = 0; i < k; ++i) codes *= static_cast<std::size_t>(k);
  t->rank_of_code.assign(codes, 0);
  do {
    t->rank_of_code[code(p, k)] = t->perms.size();
    t->perms.push_back(p);
    t->class_of.push_back(partition_index(cycle_type(p)));
  } while (std::next_permutation(p.begin(), p.end()));
  slot = std::move(t);
  return *slot;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[static_cast<std::size_t>(b[x])];
  return out;
}

std::vector<int> inverse(const std::vector<int>& a) {
  std::vector<int> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
  return out;
}

std::size_t rank(const GroupTable& t, const std::vector<int>& p) {
  return t.rank_of_code[code(p, static_cast<int>(p.size()))];
}

// Scalar series helpers with rational coefficients.
ExactSeries exp_scaled(const Rat& c, int order) {
  ExactSeries out(Var::z, order);
  Rat power = 1;
  for (int n = 0; n < order; ++n) {
    out.coeff(n) = ExactPoly(power / Rat(factorial(static_cast<unsigned>(n))));
    power *= c;
  }
  return out;
}

ExactSeries drop_z(const ExactSeries& s) {
  if (!s[0].is_zero()) throw Error("series has a constant term");
  std::vector<ExactPoly> c(s.coeffs().begin() + 1, s.coeffs().end());
  return ExactSeries(Var::z, c);
}

using MatrixSeries = std::vector<ExactMatrix>;

MatrixSeries scalar_times(const ExactSeries& s, const MatrixSeries& m) {
  const std::size_t n = std::min(static_cast<std::size_t>(s.order()), m.size());
  MatrixSeries out(n, ExactMatrix(m[0].rows(), m[0].cols()));
  for (std::size_t i = 0; i < n; ++i) {
    if (s[static_cast<int>(i)].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] = out[i + j] + s[static_cast<int>(i)] * m[j];
  }
  return out;
}

}  // namespace

std::size_t group_order(int k) { return table(k).perms.size(); }

std::vector<int> permutation(int k, std::size_t r) { return table(k).perms.at(r); }

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size());
  std::vector<int> parts;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

GroupElement group_identity(int k) {
  GroupElement out{k, std::vector<Integer>(group_order(k))};
  out.coeffs[0] = 1;  // the identity has rank 0
  return out;
}

GroupElement yjm_element(int k, int i) {
  if (i < 1 || i > k) throw Error("YJM index out of range");
  const auto& t = table(k);
  GroupElement out{k, std::vector<Integer>(t.perms.size())};
  for (int j = 1; j < i; ++j) {
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[static_cast<std::size_t>(j - 1)], p[static_cast<std::size_t>(i - 1)]);
    out.coeffs[rank(t, p)] += 1;
  }
  return out;
}

GroupElement class_sum(const Partition& mu) {
  const int k = mu.weight();
  const auto& t = table(k);
  const std::size_t idx = partition_index(mu);
  GroupElement out{k, std::vector<Integer>(t.perms.size())};
  for (std::size_t r = 0; r < t.perms.size(); ++r) {
    if (t.class_of[r] == idx) out.coeffs[r] = 1;
  }
  return out;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.k != b.k) throw Error("group elements of different degree");
  const auto& t = table(a.k);
  GroupElement out{a.k, std::vector<Integer>(t.perms.size())};
  for (std::size_t x = 0; x < t.perms.size(); ++x) {
    if (a.coeffs[x] == 0) continue;
    for (std::size_t y = 0; y < t.perms.size(); ++y) {
      if (b.coeffs[y] == 0) continue;
      out.coeffs[rank(t, compose(t.perms[x], t.perms[y]))] += a.coeffs[x] * b.coeffs[y];
    }
  }
  return out;
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  if (a.k != b.k) throw Error("group elements of different degree");
  GroupElement out = a;
  for (std::size_t x = 0; x < out.coeffs.size(); ++x) out.coeffs[x] += b.coeffs[x];
  return out;
}

ClassAlgebraElement to_class_algebra(const GroupElement& g) {
  const auto& t = table(g.k);
  const std::size_t n = enumerate_partitions(g.k).size();
  ClassAlgebraElement out{g.k, std::vector<Rat>(n)};
  std::vector<bool> set(n);
  for (std::size_t r = 0; r < t.perms.size(); ++r) {
    const std::size_t c = t.class_of[r];
    if (!set[c]) {
      out.coeffs[c] = Rat(g.coeffs[r]);
      set[c] = true;
    } else if (out.coeffs[c] != Rat(g.coeffs[r])) {
      throw VerificationError("group algebra element is not a class function on " +
                              enumerate_partitions(g.k)[c].to_string());
    }
  }
  return out;
}

ClassAlgebraElement yjm_powersum_brute(int k, int m) {
  if (k > 6) throw Error("brute-force YJM power sums are limited to k <= 6");
  if (m < 0) throw Error("YJM power must be >= 0");
  GroupElement total{k, std::vector<Integer>(group_order(k))};
  for (int i = 1; i <= k; ++i) {
    GroupElement power = group_identity(k);
    const GroupElement j = yjm_element(k, i);
    for (int e = 0; e < m; ++e) power = power * j;
    total = total + power;
  }
  return to_class_algebra(total);
}

ExactMatrix class_multiplication(const ClassAlgebraElement& e) {
  const auto& t = table(e.k);
  const auto& basis = enumerate_partitions(e.k);
  const std::size_t n = basis.size();
  std::vector<std::size_t> representative(n);
  for (std::size_t r = t.perms.size(); r-- > 0;) representative[t.class_of[r]] = r;
  ExactMatrix out(n, n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = 0; nu < n; ++nu) {
      const auto& tau = t.perms[representative[nu]];
      Rat acc = 0;
      for (std::size_t s = 0; s < t.perms.size(); ++s) {
        if (t.class_of[s] != mu) continue;
        acc += e.coeffs[t.class_of[rank(t, compose(tau, inverse(t.perms[s])))]];
      }
      out(nu, mu) = ExactPoly(acc);
    }
  }
  return out;
}

ExactMatrix on_character_basis(const ExactMatrix& on_classes, int k) {
  const auto& basis = enumerate_partitions(k);
  const std::size_t n = basis.size();
  ExactMatrix y(n, n);
  std::vector<ExactPoly> sizes;
  for (std::size_t mu = 0; mu < n; ++mu) {
    sizes.emplace_back(Rat(class_size(basis[mu])) / Rat(factorial(static_cast<unsigned>(k))));
    for (std::size_t l = 0; l < n; ++l) y(mu, l) = ExactPoly(Rat(character(basis[l], basis[mu])));
  }
  return y.transpose() * ExactMatrix::diagonal(sizes) * on_classes * y;
}

std::vector<Rat> frobenius_image(const ClassAlgebraElement& e) {
  const auto& basis = enumerate_partitions(e.k);
  std::vector<Rat> out(basis.size());
  for (std::size_t mu = 0; mu < basis.size(); ++mu) out[mu] = e.coeffs[mu] / Rat(z_factor(basis[mu]));
  return out;
}

Rat yjm_eigen(const Partition& lambda, int m) {
  if (m < 0) throw Error("YJM power must be >= 0");
  Rat cells = 0;
  for (int c : contents(lambda)) cells += pow(Rat(c), m);

  const auto f = faulhaber(m);
  auto power_sum = [&](int n) -> Rat {
    Rat acc = 0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * pow(Rat(n), static_cast<int>(i));
    return acc / (m + 1);
  };
  const auto fr = frobenius(lambda);
  Rat frob = 0;
  for (int i = 0; i < fr.d; ++i) {
    frob += (m == 0 ? 1 : 0) + power_sum(fr.a[static_cast<std::size_t>(i)]);
    const Rat legs = power_sum(fr.b[static_cast<std::size_t>(i)]);
    frob += m % 2 == 0 ? legs : Rat(-legs);
  }
  if (cells != frob) {
    throw VerificationError("content power sum of " + lambda.to_string() + " differs between cells and Frobenius form");
  }
  return cells;
}

PropA1Report verify_propA1(HamiltonianStore& store, int k, int z_order, PropA1Route route) {
  const int order = z_order + 1;
  const std::size_t n = weight_dimension(k);
  const auto& basis = enumerate_partitions(k);

  MatrixSeries lhs(static_cast<std::size_t>(order), ExactMatrix(n, n));
  lhs[0] = ExactMatrix::identity(n);
  for (int p = 1; p < order; ++p) lhs[static_cast<std::size_t>(p)] = scale(store.dispersionless(p - 2), k, true).schur;

  // sum_m z^m/m! Phi(J_1^m + ... + J_k^m) Phi^{-1} on the Schur basis
  MatrixSeries yjm(static_cast<std::size_t>(order), ExactMatrix(n, n));
  for (int m = 0; m < order; ++m) {
    ExactMatrix e;
    if (route == PropA1Route::brute) {
      e = on_character_basis(class_multiplication(yjm_powersum_brute(k, m)), k);
    } else {
      std::vector<ExactPoly> d;
      for (const auto& l : basis) d.emplace_back(yjm_eigen(l, m));
      e = ExactMatrix::diagonal(d);
    }
    yjm[static_cast<std::size_t>(m)] = ExactPoly(Rat(1) / Rat(factorial(static_cast<unsigned>(m)))) * e;
  }

  ExactSeries two_z_sinh(Var::z, order);
  for (int p = 2; p < order; p += 2) {
    two_z_sinh.coeff(p) = ExactPoly(pow(Rat(1, 2), p - 2) / Rat(factorial(static_cast<unsigned>(p - 1))));
  }
  ExactSeries beta(Var::z, order);
  for (int p = 0; p < order; ++p) beta.coeff(p) = ExactPoly(beta_coeff(p));
  ExactSeries exp_v0(Var::z, order);
  for (int p = 0; p < order; ++p) {
    exp_v0.coeff(p) = ExactPoly::variable(Var::V0, p) * Rat(Rat(1) / Rat(factorial(static_cast<unsigned>(p))));
  }

  MatrixSeries inner = scalar_times(two_z_sinh, yjm);
  for (int p = 0; p < order; ++p) {
    inner[static_cast<std::size_t>(p)] = inner[static_cast<std::size_t>(p)] + beta[p] * ExactMatrix::identity(n);
  }
  const MatrixSeries rhs = scalar_times(exp_v0, inner);

  PropA1Report out;
  out.k = k;
  out.z_order = z_order;
  out.route = route;
  for (int p = 0; p < order; ++p) {
    const ExactMatrix d = lhs[static_cast<std::size_t>(p)] - rhs[static_cast<std::size_t>(p)];
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (d(r, c).is_zero()) continue;
        ++out.defect_entries;
        if (out.first_defect_order < 0) out.first_defect_order = p;
      }
    }
  }
  return out;
}

bool sinh_identity_holds(int a, int b, int order) {
  const int work = order + 2;
  const ExactSeries lhs = exp_scaled(Rat(2 * a + 1, 2), work) - exp_scaled(Rat(-(2 * b + 1), 2), work);
  const ExactSeries one = exp_scaled(0, work);
  const ExactSeries first = drop_z(exp_scaled(a, work) - one) * drop_z(one - exp_scaled(-1, work)).reciprocal();
  const ExactSeries second = drop_z(exp_scaled(-b, work) - one) * drop_z(one - exp_scaled(1, work)).reciprocal();
  const ExactSeries two_sinh = exp_scaled(Rat(1, 2), work) - exp_scaled(Rat(-1, 2), work);
  const ExactSeries rhs = two_sinh * (first + second + one);
  return (lhs - rhs).truncated(order + 1).to_poly().is_zero();
}

}  // namespace qkdv
