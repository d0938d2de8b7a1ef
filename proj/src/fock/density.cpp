#include "qkdv/fock/density.h"

#include <algorithm>

namespace qkdv {

Density::Density(const ExactPoly& constant) { add_term({}, constant); }

Density Density::u(int j) {
  if (j < 0) throw Error("negative derivative order");
  return monomial({j}, ExactPoly(1));
}

Density Density::monomial(Key orders, const ExactPoly& coeff) {
  std::sort(orders.begin(), orders.end());
  Density d;
  d.add_term(orders, coeff);
  return d;
}

void Density::add_term(const Key& k, const ExactPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ExactPoly Density::coefficient(const Key& orders) const {
  auto it = terms_.find(orders);
  return it == terms_.end() ? ExactPoly() : it->second;
}

Density Density::without_constant() const {
  Density d = *this;
  d.terms_.erase(Key{});
  return d;
}

Density& Density::operator+=(const Density& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Density& Density::operator-=(const Density& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Density operator*(const Density& a, const Density& b) {
  Density out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Density::Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      std::sort(k.begin(), k.end());
      out.add_term(k, ca * cb);
    }
  }
  return out;
}

Density operator*(const ExactPoly& c, const Density& a) {
  Density out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : a.terms_) out.add_term(k, c * v);
  return out;
}

Density Density::dx() const {
  Density out;
  for (const auto& [k, c] : terms_) {
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i > 0 && k[i] == k[i - 1]) continue;
      const long mult = std::count(k.begin(), k.end(), k[i]);
      Key next = k;
      next[i] += 1;
      std::sort(next.begin(), next.end());
      out.add_term(next, c * Rat(mult));
    }
  }
  return out;
}

Density Density::partial(int j) const {
  Density out;
  for (const auto& [k, c] : terms_) {
    const long mult = std::count(k.begin(), k.end(), j);
    if (mult == 0) continue;
    Key next = k;
    next.erase(std::find(next.begin(), next.end(), j));
    out.add_term(next, c * Rat(mult));
  }
  return out;
}

Density Density::euler() const {
  int top = -1;
  for (const auto& [k, c] : terms_) {
    if (!k.empty()) top = std::max(top, k.back());
  }
  Density out;
  for (int j = 0; j <= top; ++j) {
    Density piece = partial(j);
    for (int r = 0; r < j; ++r) piece = piece.dx();
    if (j % 2 == 1) {
      out -= piece;
    } else {
      out += piece;
    }
  }
  return out;
}

Density Density::map_coefficients(const std::function<ExactPoly(const ExactPoly&)>& fn) const {
  Density out;
  for (const auto& [k, c] : terms_) out.add_term(k, fn(c));
  return out;
}

int Density::max_u_degree() const {
  int n = 0;
  for (const auto& [k, c] : terms_) n = std::max(n, static_cast<int>(k.size()));
  return n;
}

std::string u_name(int j) {
  if (j == 0) return "u";
  if (j <= 3) return "u_" + std::string(static_cast<std::size_t>(j), 'x');
  return "u_" + std::to_string(j) + "x";
}

std::string Density::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Print by u-degree, then derivative orders, for readability.
  std::vector<const std::pair<const Key, ExactPoly>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->first.size() > b->first.size(); });
  for (const auto* t : order) {
    const auto& [k, c] = *t;
    std::string mono;
    for (std::size_t i = 0; i < k.size();) {
      std::size_t r = i;
      while (r < k.size() && k[r] == k[i]) ++r;
      if (!mono.empty()) mono += "*";
      mono += u_name(k[i]);
      if (r - i > 1) mono += "^" + std::to_string(r - i);
      i = r;
    }
    const bool negative = c.size() == 1 && c.terms().front().second < 0;
    const std::string coeff = c.size() == 1 ? (negative ? -c : c).to_string() : "(" + c.to_string() + ")";
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace qkdv
