#include "qkdv/exact/linear.h"

#include <algorithm>
#include <utility>

namespace qkdv {

RatFunc::RatFunc(ExactPoly n, ExactPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw Error("rational function with zero denominator");
}

RatFunc RatFunc::simplified() const {
  if (num.is_zero()) return RatFunc();
  if (den.size() == 1) {
    const auto& [e, c] = den.terms().front();
    Exponents inv{};
    for (std::size_t i = 0; i < kVarCount; ++i) inv[i] = static_cast<std::int16_t>(-e[i]);
    return RatFunc(num * ExactPoly::monomial(inv, 1 / c));
  }
  if (!num.has_negative_exponents() && !den.has_negative_exponents()) {
    if (auto q = num.divide_exact(den)) return RatFunc(std::move(*q));
  }
  return *this;
}

std::optional<ExactPoly> RatFunc::as_poly() const {
  RatFunc s = simplified();
  if (s.den == ExactPoly(1)) return s.num;
  return std::nullopt;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den == b.den) return RatFunc(a.num + b.num, a.den).simplified();
  return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den).simplified();
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den == b.den) return RatFunc(a.num - b.num, a.den).simplified();
  return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den).simplified();
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num * b.num, a.den * b.den).simplified(); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num.is_zero()) throw Error("division by zero rational function");
  return RatFunc(a.num * b.den, a.den * b.num).simplified();
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num * b.den == b.num * a.den; }

std::string RatFunc::to_string() const {
  if (den == ExactPoly(1)) return num.to_string();
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

InconsistentSystem::InconsistentSystem(std::size_t row, const std::string& what)
    : VerificationError(what + " (equation " + std::to_string(row) + ")"), row_(row) {}

namespace {

std::string join_columns(const std::vector<std::size_t>& cols) {
  std::string out;
  for (auto c : cols) out += (out.empty() ? "" : ",") + std::to_string(c);
  return out;
}

}  // namespace

RankDeficient::RankDeficient(std::vector<std::size_t> free_columns)
    : Error("rank-deficient system; undetermined unknowns: " + join_columns(free_columns)),
      free_(std::move(free_columns)) {}

std::vector<RatFunc> solve_linear(const ExactMatrix& a, const std::vector<ExactPoly>& b) {
  if (b.size() != a.rows()) throw Error("solve_linear: right-hand side has the wrong length");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  struct Row {
    std::vector<ExactPoly> coeffs;
    ExactPoly rhs;
    std::size_t origin;
  };
  std::vector<Row> rows;
  rows.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    Row row{std::vector<ExactPoly>(n), b[r], r};
    for (std::size_t c = 0; c < n; ++c) row.coeffs[c] = a(r, c);
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> free;
  std::vector<std::size_t> pivot_col;  // pivot_col[k] = column of the k-th pivot row
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = m;
    for (std::size_t r = rank; r < m; ++r) {
      if (rows[r].coeffs[c].is_zero()) continue;
      if (best == m || rows[r].coeffs[c].size() < rows[best].coeffs[c].size()) best = r;
    }
    if (best == m) {
      free.push_back(c);
      continue;
    }
    std::swap(rows[rank], rows[best]);
    const Row& piv = rows[rank];
    for (std::size_t r = rank + 1; r < m; ++r) {
      Row& row = rows[r];
      if (row.coeffs[c].is_zero()) continue;
      const ExactPoly factor = row.coeffs[c];
      for (std::size_t j = c; j < n; ++j) row.coeffs[j] = piv.coeffs[c] * row.coeffs[j] - factor * piv.coeffs[j];
      row.rhs = piv.coeffs[c] * row.rhs - factor * piv.rhs;
    }
    pivot_col.push_back(c);
    ++rank;
  }

  std::optional<std::size_t> violated;
  for (std::size_t r = rank; r < m; ++r) {
    if (!rows[r].rhs.is_zero() && (!violated || rows[r].origin < *violated)) violated = rows[r].origin;
  }
  if (violated) throw InconsistentSystem(*violated, "inconsistent linear system");
  if (!free.empty()) throw RankDeficient(free);

  std::vector<RatFunc> x(n);
  for (std::size_t k = rank; k-- > 0;) {
    const Row& row = rows[k];
    const std::size_t c = pivot_col[k];
    RatFunc acc(row.rhs);
    for (std::size_t j = c + 1; j < n; ++j) {
      if (!row.coeffs[j].is_zero()) acc = acc - RatFunc(row.coeffs[j]) * x[j];
    }
    x[c] = acc / RatFunc(row.coeffs[c]);
  }
  return x;
}

void RationalSystem::add(std::map<std::size_t, Rat> row, Rat rhs) {
  const std::size_t index = added_++;
  std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
  while (!row.empty()) {
    const auto [col, lead] = *row.begin();
    if (col >= n_) throw Error("equation refers to an unknown out of range");
    auto it = pivots_.find(col);
    if (it == pivots_.end()) {
      const Rat inv = 1 / lead;
      for (auto& [c, v] : row) v *= inv;
      rhs *= inv;
      pivots_.emplace(col, Pivot{std::move(row), std::move(rhs)});
      return;
    }
    const Rat factor = lead;
    for (const auto& [c, v] : it->second.row) {
      Rat& slot = row[c];
      slot -= factor * v;
      if (slot == 0) row.erase(c);
    }
    rhs -= factor * it->second.rhs;
  }
  if (rhs != 0) throw InconsistentSystem(index, "inconsistent linear system");
}

std::vector<std::size_t> RationalSystem::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < n_; ++c) {
    if (!pivots_.contains(c)) out.push_back(c);
  }
  return out;
}

std::vector<Rat> RationalSystem::solve() const {
  if (auto free = free_columns(); !free.empty()) throw RankDeficient(std::move(free));
  std::vector<Rat> x(n_);
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    Rat acc = it->second.rhs;
    for (const auto& [c, v] : it->second.row) {
      if (c != it->first) acc -= v * x[c];
    }
    x[it->first] = acc;
  }
  return x;
}

}  // namespace qkdv
