#include "qkdv/exact/matrix.h"

namespace qkdv {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = ExactPoly(1);
  return out;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<ExactPoly>& d) {
  ExactMatrix out(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool ExactMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && !(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

ExactMatrix ExactMatrix::map(const std::function<ExactPoly(const ExactPoly&)>& fn) const {
  ExactMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = fn(data_[i]);
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix dimension mismatch in +");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix dimension mismatch in -");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch in *");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ExactPoly& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const ExactPoly& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

ExactMatrix operator*(const ExactPoly& c, const ExactMatrix& a) {
  return a.map([&](const ExactPoly& e) { return c * e; });
}

std::vector<ExactPoly> ExactMatrix::apply(const std::vector<ExactPoly>& v) const {
  if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
  std::vector<ExactPoly> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

std::string ExactMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c != 0) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]\n";
  }
  return out;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

std::vector<ExactPoly> charpoly_coefficients(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error("charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<ExactPoly> coeffs{ExactPoly(1)};
  if (n == 0) return coeffs;
  coeffs.push_back(-m(0, 0));
  // Grow the leading principal block one row/column at a time; the new
  // coefficient vector is a lower-triangular Toeplitz matrix times the old.
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<ExactPoly> toeplitz;
    toeplitz.reserve(r + 2);
    toeplitz.emplace_back(1);
    toeplitz.push_back(-m(r, r));
    std::vector<ExactPoly> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      ExactPoly dot;
      for (std::size_t i = 0; i < r; ++i) {
        if (!m(r, i).is_zero() && !v[i].is_zero()) dot += m(r, i) * v[i];
      }
      toeplitz.push_back(-dot);
      if (k + 1 == r) break;
      std::vector<ExactPoly> next(r);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          if (!m(i, j).is_zero() && !v[j].is_zero()) next[i] += m(i, j) * v[j];
        }
      }
      v = std::move(next);
    }
    std::vector<ExactPoly> next_coeffs(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        if (!toeplitz[i - j].is_zero() && !coeffs[j].is_zero()) next_coeffs[i] += toeplitz[i - j] * coeffs[j];
      }
    }
    coeffs = std::move(next_coeffs);
  }
  return coeffs;
}

ExactPoly charpoly(const ExactMatrix& m, Var rho) {
  const auto coeffs = charpoly_coefficients(m);
  const int n = static_cast<int>(m.rows());
  ExactPoly out;
  for (int k = 0; k <= n; ++k) out += coeffs[static_cast<std::size_t>(k)] * ExactPoly::variable(rho, n - k);
  return out;
}

}  // namespace qkdv
