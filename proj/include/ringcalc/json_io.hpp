#pragma once

// JSON schemas shared with the CLI:
//   {"kind":"complex_matrix","n":N,"data":[[re,im],...]}    row-major
//   {"kind":"rational_matrix","n":N,"data":[[num,den],...]} row-major
// Scalars travel as 1x1 matrices. Series dumps are for debugging only.

#include <json.hpp>

#include "ringcalc/laurent.hpp"

namespace ringcalc {

using json = nlohmann::ordered_json;

inline json complex_matrix_to_json(const Matrix<Cplx<double>>& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      data.push_back({m(i, j).re, m(i, j).im});
  return json{{"kind", "complex_matrix"}, {"n", m.dim()}, {"data", data}};
}

inline void check_desk_scale(std::size_t n) {
  if (n == 0 || n > 64) throw std::invalid_argument("matrix dimension outside the desk scale (1..64)");
}

inline Matrix<Cplx<double>> complex_matrix_from_json(const json& j) {
  if (j.value("kind", "") != "complex_matrix") throw std::invalid_argument("not a complex_matrix");
  std::size_t n = j.at("n").get<std::size_t>();
  check_desk_scale(n);
  const auto& data = j.at("data");
  if (data.size() != n * n) throw std::invalid_argument("matrix data length mismatch");
  Matrix<Cplx<double>> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& e = data[i * n + k];
      m(i, k) = {e.at(0).get<double>(), e.at(1).get<double>()};
    }
  return m;
}

inline json rational_matrix_to_json(const Matrix<Rational>& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const auto& q = m(i, j);
      if (q.num > INT64_MAX || q.num < INT64_MIN || q.den > INT64_MAX)
        throw std::domain_error("rational entry exceeds the 64-bit JSON range");
      data.push_back({(std::int64_t)q.num, (std::int64_t)q.den});
    }
  return json{{"kind", "rational_matrix"}, {"n", m.dim()}, {"data", data}};
}

inline Matrix<Rational> rational_matrix_from_json(const json& j) {
  if (j.value("kind", "") != "rational_matrix")
    throw std::invalid_argument("not a rational_matrix");
  std::size_t n = j.at("n").get<std::size_t>();
  check_desk_scale(n);
  const auto& data = j.at("data");
  if (data.size() != n * n) throw std::invalid_argument("matrix data length mismatch");
  Matrix<Rational> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& e = data[i * n + k];
      m(i, k) = Rational(e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>());
    }
  return m;
}

// debugging dump: {"window":[lo,hi],"class":"rapid_ring","coeffs":{"0":...}}
inline json series_to_json(const RationalRing&, const LaurentSeries<RationalRing>& s) {
  json coeffs = json::object();
  for (int n = s.lo; !s.empty() && n <= s.hi(); ++n) {
    const auto& q = s.c[n - s.lo];
    if (q.is_zero()) continue;
    coeffs[std::to_string(n)] = q.str();
  }
  return json{{"window", {s.empty() ? 0 : s.lo, s.empty() ? -1 : s.hi()}},
              {"class", growth_class_name(s.cls)},
              {"coeffs", coeffs}};
}

}  // namespace ringcalc
