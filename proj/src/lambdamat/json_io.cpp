#include "uniton/json_io.hpp"

#include "uniton/errors.hpp"

namespace uniton {

nlohmann::json lpoly_to_json(const LambdaPoly &p) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto &[k, c] : p.terms()) obj[std::to_string(k)] = format_rf(c);
  return obj;
}

LambdaPoly lpoly_from_json(const nlohmann::json &doc) {
  if (doc.is_string()) return LambdaPoly(parse_rf(doc.get<std::string>()));
  if (!doc.is_object()) throw SchemaError("entry must be an object of λ-degree terms");
  LambdaPoly p;
  for (const auto &[key, val] : doc.items()) {
    int k;
    try {
      std::size_t used = 0;
      k = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception &) {
      throw SchemaError("λ-degree key is not an integer: " + key);
    }
    if (!val.is_string()) throw SchemaError("coefficient must be a string");
    p += LambdaPoly::monomial(parse_rf(val.get<std::string>()), k);
  }
  return p;
}

nlohmann::json lmat_to_json(const LambdaMatrix &m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(lpoly_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.n()}, {"entries", std::move(rows)}};
}

LambdaMatrix lmat_from_json(const nlohmann::json &doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
    throw SchemaError("matrix document needs \"n\" and \"entries\"");
  if (!doc["n"].is_number_integer()) throw SchemaError("\"n\" must be an integer");
  int n = doc["n"].get<int>();
  if (n < 1) throw SchemaError("\"n\" must be positive");
  const auto &rows = doc["entries"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw SchemaError("\"entries\" must have n rows");
  LambdaMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      throw SchemaError("row " + std::to_string(i + 1) + " must have n entries");
    for (int j = 0; j < n; ++j) m(i, j) = lpoly_from_json(rows[i][j]);
  }
  return m;
}

}  // namespace uniton
