#include "qkdv/exact/poly.h"

#include <algorithm>

namespace qkdv {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {"h", "eps2", "U0", "sigma", "V0", "z", "rho"};

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (std::size_t i = 0; i < kVarCount; ++i) out[i] = static_cast<std::int16_t>(a[i] + b[i]);
  return out;
}

std::size_t index_of(Var v) { return static_cast<std::size_t>(v); }

// Merge-sum of two sorted term lists; `sign` is applied to b.
std::vector<ExactPoly::Term> merge(const std::vector<ExactPoly::Term>& a, const std::vector<ExactPoly::Term>& b,
                                   int sign) {
  std::vector<ExactPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, sign > 0 ? ib->second : Rat(-ib->second));
      ++ib;
    } else {
      Rat c = sign > 0 ? Rat(ia->second + ib->second) : Rat(ia->second - ib->second);
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[index_of(v)]; }

Var var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (kVarNames[i] == name) return kAllVars[i];
  }
  throw Error("unknown variable: " + std::string(name));
}

ExactPoly::ExactPoly(const Rat& c) {
  if (c != 0) terms_.emplace_back(Exponents{}, c);
}

ExactPoly::ExactPoly(long c) : ExactPoly(Rat(c)) {}

ExactPoly ExactPoly::variable(Var v, int power) {
  Exponents e{};
  e[index_of(v)] = static_cast<std::int16_t>(power);
  return monomial(e, Rat(1));
}

ExactPoly ExactPoly::monomial(const Exponents& exps, const Rat& coeff) {
  ExactPoly p;
  if (coeff != 0) p.terms_.emplace_back(exps, coeff);
  return p;
}

bool ExactPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Exponents{});
}

Rat ExactPoly::constant_term() const {
  for (const auto& [e, c] : terms_) {
    if (e == Exponents{}) return c;
  }
  return Rat(0);
}

bool ExactPoly::depends_on(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first[index_of(v)] != 0; });
}

int ExactPoly::degree(Var v) const {
  if (terms_.empty()) return 0;
  int d = terms_.front().first[index_of(v)];
  for (const auto& t : terms_) d = std::max<int>(d, t.first[index_of(v)]);
  return d;
}

int ExactPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  int d = terms_.front().first[index_of(v)];
  for (const auto& t : terms_) d = std::min<int>(d, t.first[index_of(v)]);
  return d;
}

bool ExactPoly::has_negative_exponents() const {
  for (const auto& [e, c] : terms_) {
    for (auto x : e) {
      if (x < 0) return true;
    }
  }
  return false;
}

ExactPoly ExactPoly::coefficient(Var v, int power) const {
  ExactPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[index_of(v)] != power) continue;
    Exponents f = e;
    f[index_of(v)] = 0;
    out.terms_.emplace_back(f, c);
  }
  out.normalize();
  return out;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& o) {
  *this = *this * o;
  return *this;
}

ExactPoly& ExactPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].first == Exponents{}) return b * a.terms_[0].second;
  if (b.terms_.size() == 1 && b.terms_[0].first == Exponents{}) return a * b.terms_[0].second;
  ExactPoly out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.terms_.emplace_back(add_exponents(ea, eb), ca * cb);
    }
  }
  out.normalize();
  return out;
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

void ExactPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms_ = std::move(out);
}

ExactPoly ExactPoly::substitute(Var v, const ExactPoly& value) const {
  const std::size_t vi = index_of(v);
  const int lo = min_degree(v);
  const int hi = degree(v);
  ExactPoly inverse;
  if (lo < 0) {
    if (value.size() != 1) throw Error("substitution into a negative power needs a single-term value");
    Exponents inv{};
    for (std::size_t i = 0; i < kVarCount; ++i) inv[i] = static_cast<std::int16_t>(-value.terms_[0].first[i]);
    inverse = monomial(inv, 1 / value.terms_[0].second);
  }
  std::vector<ExactPoly> pos_pows{ExactPoly(1)};
  std::vector<ExactPoly> neg_pows{ExactPoly(1)};
  for (int k = 1; k <= hi; ++k) pos_pows.push_back(pos_pows.back() * value);
  for (int k = 1; k <= -lo; ++k) neg_pows.push_back(neg_pows.back() * inverse);

  ExactPoly out;
  for (const auto& [e, c] : terms_) {
    const int k = e[vi];
    Exponents f = e;
    f[vi] = 0;
    out += monomial(f, c) * (k >= 0 ? pos_pows[static_cast<std::size_t>(k)] : neg_pows[static_cast<std::size_t>(-k)]);
  }
  return out;
}

ExactPoly ExactPoly::substitute(std::string_view name, const ExactPoly& value) const {
  return substitute(var_from_name(name), value);
}

ExactPoly ExactPoly::evaluate(Var v, const Rat& value) const {
  const std::size_t vi = index_of(v);
  ExactPoly out;
  out.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[vi] = 0;
    Rat coeff = e[vi] == 0 ? c : Rat(c * qkdv::pow(value, e[vi]));
    out.terms_.emplace_back(f, std::move(coeff));
  }
  out.normalize();
  return out;
}

ExactPoly ExactPoly::derivative(Var v) const {
  const std::size_t vi = index_of(v);
  ExactPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[vi] == 0) continue;
    Exponents f = e;
    f[vi] = static_cast<std::int16_t>(f[vi] - 1);
    out.terms_.emplace_back(f, c * e[vi]);
  }
  out.normalize();
  return out;
}

ExactPoly ExactPoly::shift(Var v, int power) const {
  ExactPoly out = *this;
  for (auto& t : out.terms_) t.first[index_of(v)] = static_cast<std::int16_t>(t.first[index_of(v)] + power);
  return out;  // a uniform shift preserves the lexicographic order
}

ExactPoly ExactPoly::pow(unsigned n) const {
  ExactPoly out(1);
  ExactPoly base = *this;
  while (n != 0) {
    if (n & 1U) out *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return out;
}

std::optional<ExactPoly> ExactPoly::divide_exact(const ExactPoly& divisor) const {
  if (divisor.is_zero()) throw Error("division by the zero polynomial");
  if (has_negative_exponents() || divisor.has_negative_exponents()) {
    throw Error("exact division requires ordinary polynomials");
  }
  if (divisor.is_constant()) return *this * Rat(1 / divisor.constant_term());
  const Term& lead = divisor.terms_.back();
  ExactPoly remainder = *this;
  ExactPoly quotient;
  while (!remainder.is_zero()) {
    const Term& r = remainder.terms_.back();
    Exponents q{};
    for (std::size_t i = 0; i < kVarCount; ++i) {
      int d = r.first[i] - lead.first[i];
      if (d < 0) return std::nullopt;
      q[i] = static_cast<std::int16_t>(d);
    }
    ExactPoly step = monomial(q, r.second / lead.second);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

std::string ExactPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool is_unit_monomial = e == Exponents{};
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || is_unit_monomial) {
      out += qkdv::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (wrote) out += "*";
      out += kVarNames[i];
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
      wrote = true;
    }
  }
  return out;
}

}  // namespace qkdv
