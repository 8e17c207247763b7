#pragma once

#include <string>

#include <json.hpp>

#include "gt42/cp5.hpp"
#include "gt42/frame.hpp"
#include "gt42/moment.hpp"

namespace gt42 {

using nlohmann::json;

// Scalar serialization:
//   double            <-> number
//   Complex           <-> [re, im] (numbers)
//   GaussianRational  <-> ["p/q", "r/s"] (exact strings)
// Readers are permissive across these shapes so one matrix file can be fed
// to any scalar mode; writers always use the canonical shape above.
template <class S>
json scalar_to_json(const S& v);
template <class S>
S scalar_from_json(const json& j);

template <>
inline json scalar_to_json<double>(const double& v) { return v; }
template <>
inline json scalar_to_json<Complex>(const Complex& v) { return json::array({v.real(), v.imag()}); }
template <>
inline json scalar_to_json<GaussianRational>(const GaussianRational& v) {
  return json::array({rational_string(v.re), rational_string(v.im)});
}

namespace detail {
inline double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    return r.get_d();
  }
  throw InputError("expected a number or rational string, got: " + j.dump());
}
}  // namespace detail

template <>
inline double scalar_from_json<double>(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError("scalar array must have two entries");
    const double im = detail::number_from_json(j[1]);
    if (im != 0.0) throw InputError("imaginary part must vanish in real mode");
    return detail::number_from_json(j[0]);
  }
  return detail::number_from_json(j);
}

template <>
inline Complex scalar_from_json<Complex>(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError("scalar array must have two entries");
    return Complex(detail::number_from_json(j[0]), detail::number_from_json(j[1]));
  }
  return Complex(detail::number_from_json(j), 0.0);
}

template <>
inline GaussianRational scalar_from_json<GaussianRational>(const json& j) {
  auto part = [](const json& p) -> Rational {
    if (p.is_string()) return parse_rational(p.get<std::string>());
    if (p.is_number_integer()) return Rational(p.get<long>());
    throw InputError("exact mode requires integer or rational-string entries, got: " + p.dump());
  };
  if (j.is_array()) {
    if (j.size() != 2) throw InputError("scalar array must have two entries");
    return GaussianRational{part(j[0]), part(j[1])};
  }
  return GaussianRational{part(j), Rational(0)};
}

// Frame files: {"scalar": "<mode>", "rows": [[e,e],[e,e],[e,e],[e,e]]}.
template <class S>
json frame_to_json(const Frame<S>& f) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r)
    rows.push_back(json::array({scalar_to_json<S>(f(r, 0)), scalar_to_json<S>(f(r, 1))}));
  return json{{"scalar", scalar_mode_name(ScalarTraits<S>::mode)}, {"rows", rows}};
}

template <class S>
Frame<S> frame_from_json(const json& j) {
  const json& rows = j.is_object() ? j.at("rows") : j;
  if (!rows.is_array() || rows.size() != 4)
    throw InputError("frame requires exactly 4 rows");
  Frame<S> f;
  for (int r = 0; r < 4; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != 2)
      throw InputError("frame row " + std::to_string(r + 1) + " must have 2 entries");
    f(r, 0) = scalar_from_json<S>(row[0]);
    f(r, 1) = scalar_from_json<S>(row[1]);
  }
  return f;
}

// Projective 5-space points: {"scalar": ..., "z": [e,e,e,e,e,e]} or a bare
// 6-entry array.
template <class S>
json cp5_to_json(const CP5Point<S>& p) {
  json z = json::array();
  for (int k = 0; k < kNumPairs; ++k) z.push_back(scalar_to_json<S>(p.z[k]));
  return json{{"scalar", scalar_mode_name(ScalarTraits<S>::mode)}, {"z", z}};
}

template <class S>
CP5Point<S> cp5_from_json(const json& j) {
  const json& z = j.is_object() ? j.at("z") : j;
  if (!z.is_array() || z.size() != kNumPairs)
    throw InputError("projective point requires exactly 6 coordinates");
  CP5Point<S> p;
  for (int k = 0; k < kNumPairs; ++k) p.z[k] = scalar_from_json<S>(z[k]);
  return p;
}

// Parse with position info surfaced as InputError.
json parse_json_text(const std::string& text);
json load_json_file(const std::string& path);  // "-" reads stdin

json moment_to_json(const MomentPoint<double>& mu);
json pattern_to_json(ZeroPattern pattern);      // array of pair names
ZeroPattern pattern_from_json(const json& j);

}  // namespace gt42
