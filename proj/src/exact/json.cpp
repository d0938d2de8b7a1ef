#include "qkdv/exact/json.h"

namespace qkdv {

nlohmann::json poly_to_json(const ExactPoly& p) {
  nlohmann::json vars = nlohmann::json::array();
  for (Var v : kAllVars) vars.push_back(std::string(var_name(v)));
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json exp = nlohmann::json::array();
    for (auto x : e) exp.push_back(static_cast<int>(x));
    terms.push_back({{"exp", exp}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return {{"vars", vars}, {"terms", terms}};
}

ExactPoly poly_from_json(const nlohmann::json& j) {
  const auto& vars = j.at("vars");
  if (!vars.is_array() || vars.size() > kVarCount) throw Error("malformed polynomial: bad variable list");
  std::vector<std::size_t> slot;
  for (const auto& name : vars) slot.push_back(static_cast<std::size_t>(var_from_name(name.get<std::string>())));
  ExactPoly out;
  for (const auto& t : j.at("terms")) {
    const auto& exp = t.at("exp");
    if (exp.size() != slot.size()) throw Error("malformed polynomial: exponent length mismatch");
    Exponents e{};
    for (std::size_t i = 0; i < slot.size(); ++i) e[slot[i]] = static_cast<std::int16_t>(exp[i].get<int>());
    Rat c(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
    c.canonicalize();
    out += ExactPoly::monomial(e, c);
  }
  return out;
}

nlohmann::json matrix_to_json(const ExactMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(const nlohmann::json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw Error("malformed matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = poly_from_json(j[r][c]);
  }
  return m;
}

}  // namespace qkdv
