#pragma once

// Private helpers shared by the JSON writers in core.

#include <json.hpp>

#include "prelog/int_matrix.hpp"

namespace prelog::detail {

// 2^53 - 1: the largest integer every JSON reader represents exactly.
inline const Integer& max_safe_integer() {
  static const Integer v("9007199254740991");
  return v;
}

inline nlohmann::json int_json(const Integer& x) {
  if (abs(x) <= max_safe_integer()) return nlohmann::json(x.get_si());
  return nlohmann::json(x.get_str());
}

inline nlohmann::json vector_json(const IntVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

inline nlohmann::json matrix_json(const IntMatrix& m) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_json(m.row(r)));
  return a;
}

/// Accepts a JSON integer or a decimal string.
inline Integer integer_from(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long>());
}

}  // namespace prelog::detail
