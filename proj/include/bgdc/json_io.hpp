#pragma once

// JSON (de)serialization for the documented interchange schemas:
//
//   kinematics  {"nu":"1","couplings":{"lambda":"1",...},"conserve_momentum":true,
//                "particles":[{"k":[...],"eps":[...],"eps_bar":[...],
//                              "colour":1,"colour_bar":1},...]}
//   algebra     {"dim":3,"name":"su2","f":[[[...rational strings...]]]}
//
// Rationals serialize as "p/q" strings, complex scalars as {"re","im"};
// float-mode scalars serialize as JSON numbers (or {"re","im"} pairs when the
// imaginary part survives).  Every writer here is the inverse of the matching
// reader, so emitted files round-trip.

#include <string>

#include "json.hpp"

#include "bgdc/colour.hpp"
#include "bgdc/kinematics.hpp"
#include "bgdc/scalar.hpp"
#include "bgdc/words.hpp"

namespace bgdc {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// scalars

inline json scalar_to_json(const ExactScalar& s) {
  if (s.im == 0) return json(format_rational(s.re));
  return json{{"re", format_rational(s.re)}, {"im", format_rational(s.im)}};
}

inline json scalar_to_json(const FloatScalar& s) {
  if (s.imag() == 0.0) return json(s.real());
  return json{{"re", s.real()}, {"im", s.imag()}};
}

namespace detail {

inline double json_to_double(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>()).convert_to<double>();
  return j.get<double>();
}

}  // namespace detail

template <class F>
F scalar_from_json(const json& j);

template <>
inline ExactScalar scalar_from_json<ExactScalar>(const json& j) {
  if (j.is_object())
    return ExactScalar(parse_rational(j.at("re").get<std::string>()),
                       parse_rational(j.at("im").get<std::string>()));
  if (j.is_string()) return ExactScalar(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return ExactScalar(j.get<long long>());
  throw std::invalid_argument("exact scalar JSON must be a rational string, integer, or {re,im}: " +
                              j.dump());
}

template <>
inline FloatScalar scalar_from_json<FloatScalar>(const json& j) {
  if (j.is_object())
    return FloatScalar(detail::json_to_double(j.at("re")), detail::json_to_double(j.at("im")));
  return FloatScalar(detail::json_to_double(j), 0.0);
}

// ---------------------------------------------------------------------------
// vectors

template <class F>
json vec_to_json(const Vec3<F>& v) {
  return json::array({scalar_to_json(v.c[0]), scalar_to_json(v.c[1]), scalar_to_json(v.c[2])});
}

template <class F>
Vec3<F> vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("vector JSON must be a 3-element array: " + j.dump());
  Vec3<F> v;
  for (int i = 0; i < 3; ++i) v.c[i] = scalar_from_json<F>(j[std::size_t(i)]);
  return v;
}

// ---------------------------------------------------------------------------
// kinematic configurations

template <class F>
json kinconfig_to_json(const KinConfig<F>& cfg) {
  json particles = json::array();
  for (const auto& p : cfg.particles) {
    particles.push_back(json{{"k", vec_to_json(p.k)},
                             {"eps", vec_to_json(p.eps)},
                             {"eps_bar", vec_to_json(p.eps_bar)},
                             {"colour", p.colour},
                             {"colour_bar", p.colour_bar}});
  }
  return json{{"nu", scalar_to_json(cfg.nu)},
              {"couplings",
               {{"lambda", scalar_to_json(cfg.lambda)},
                {"kappa", scalar_to_json(cfg.kappa)},
                {"gamma", scalar_to_json(cfg.gamma)}}},
              {"conserve_momentum", cfg.conserve_momentum},
              {"particles", particles}};
}

template <class F>
KinConfig<F> kinconfig_from_json(const json& j) {
  KinConfig<F> cfg;
  cfg.nu = scalar_from_json<F>(j.at("nu"));
  if (j.contains("couplings")) {
    const json& c = j.at("couplings");
    if (c.contains("lambda")) cfg.lambda = scalar_from_json<F>(c.at("lambda"));
    if (c.contains("kappa")) cfg.kappa = scalar_from_json<F>(c.at("kappa"));
    if (c.contains("gamma")) cfg.gamma = scalar_from_json<F>(c.at("gamma"));
  }
  cfg.conserve_momentum = j.value("conserve_momentum", true);
  for (const json& pj : j.at("particles")) {
    Particle<F> p;
    p.k = vec_from_json<F>(pj.at("k"));
    p.eps = vec_from_json<F>(pj.at("eps"));
    p.eps_bar = pj.contains("eps_bar") ? vec_from_json<F>(pj.at("eps_bar")) : p.eps;
    p.colour = pj.value("colour", 1);
    p.colour_bar = pj.value("colour_bar", p.colour);
    cfg.particles.push_back(std::move(p));
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// structure constants

template <class F>
json algebra_to_json(const StructureConstants<F>& sc) {
  const int d = sc.dim();
  json f = json::array();
  for (int a = 1; a <= d; ++a) {
    json fa = json::array();
    for (int b = 1; b <= d; ++b) {
      json fab = json::array();
      for (int c = 1; c <= d; ++c) fab.push_back(scalar_to_json(sc.f(a, b, c)));
      fa.push_back(std::move(fab));
    }
    f.push_back(std::move(fa));
  }
  return json{{"dim", d}, {"name", sc.name()}, {"f", std::move(f)}};
}

template <class F>
StructureConstants<F> algebra_from_json(const json& j) {
  const int d = j.at("dim").get<int>();
  StructureConstants<F> sc(d, j.value("name", std::string("custom")));
  const json& f = j.at("f");
  if (!f.is_array() || int(f.size()) != d)
    throw std::invalid_argument("structure-constant tensor must be dim^3");
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c) {
        F val = scalar_from_json<F>(f[std::size_t(a - 1)].at(std::size_t(b - 1)).at(std::size_t(c - 1)));
        if (!field_traits<F>::is_zero(val)) sc.set_f(a, b, c, val);
      }
  return sc;
}

// ---------------------------------------------------------------------------
// formal sums ({term, coeff} arrays, terms as word strings)

template <class F>
json formal_sum_to_json(const FormalSum<Word, F>& s) {
  json out = json::array();
  for (const auto& [w, c] : s.terms())
    out.push_back(json{{"term", w.str()}, {"coeff", scalar_to_json(c)}});
  return out;
}

}  // namespace bgdc
