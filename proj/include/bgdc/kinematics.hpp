#pragma once

// External data: momenta, polarizations, the dispersion relation, Mandelstam
// variables, and validation of kinematic configurations.
//
// Conventions: Euclidean metric (raising/lowering trivial), all dot products
// bilinear (never conjugated), energies always derived from the dispersion
// relation i*omega_p + nu*k_p^2 = 0 and never stored.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgdc/report.hpp"
#include "bgdc/scalar.hpp"
#include "bgdc/words.hpp"

namespace bgdc {

// Thrown when a required propagator denominator s_P vanishes.
struct SPoleError : std::runtime_error {
  Word subword;
  explicit SPoleError(const Word& P)
      : std::runtime_error("vanishing Mandelstam denominator s_" + P.str()),
        subword(P) {}
};

template <class F>
struct Vec3 {
  std::array<F, 3> c{};

  Vec3() = default;
  Vec3(F x, F y, F z) : c{std::move(x), std::move(y), std::move(z)} {}

  F dot(const Vec3& o) const {
    return c[0] * o.c[0] + c[1] * o.c[1] + c[2] * o.c[2];
  }
  F norm2() const { return dot(*this); }
  bool is_zero() const {
    return field_traits<F>::is_zero(c[0]) && field_traits<F>::is_zero(c[1]) &&
           field_traits<F>::is_zero(c[2]);
  }

  Vec3 operator+(const Vec3& o) const {
    return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]};
  }
  Vec3 operator-(const Vec3& o) const {
    return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]};
  }
  Vec3 operator-() const { return {-c[0], -c[1], -c[2]}; }
  Vec3 scaled(const F& s) const { return {c[0] * s, c[1] * s, c[2] * s}; }
  Vec3& operator+=(const Vec3& o) {
    c[0] += o.c[0];
    c[1] += o.c[1];
    c[2] += o.c[2];
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    c[0] -= o.c[0];
    c[1] -= o.c[1];
    c[2] -= o.c[2];
    return *this;
  }
  friend bool operator==(const Vec3& a, const Vec3& b) {
    return a.c[0] == b.c[0] && a.c[1] == b.c[1] && a.c[2] == b.c[2];
  }
};

template <class F>
struct Particle {
  Vec3<F> k;        // momentum
  Vec3<F> eps;      // polarization, eps . k = 0
  Vec3<F> eps_bar;  // barred polarization, eps_bar . k = 0
  int colour = 1;
  int colour_bar = 1;
};

template <class F>
struct KinConfig {
  std::vector<Particle<F>> particles;  // particle p lives at index p-1
  F nu = field_traits<F>::one();       // viscosity
  F lambda = field_traits<F>::one();
  F kappa = field_traits<F>::one();
  F gamma = field_traits<F>::one();
  bool conserve_momentum = true;

  int n() const { return int(particles.size()); }
  const Particle<F>& particle(Letter p) const {
    if (p < 1 || p > n()) throw std::invalid_argument("unknown particle " + std::to_string(p));
    return particles[std::size_t(p) - 1];
  }
  Vec3<F> momentum(const Word& P) const {
    Vec3<F> k;
    for (Letter p : P) k += particle(p).k;
    return k;
  }
};

template <class F>
F omega(const KinConfig<F>& cfg, Letter p) {
  return field_traits<F>::i() * cfg.nu * cfg.particle(p).k.norm2();
}

// s_P = 2 nu sum_{p<q in P} k_p . k_q;  zero for single letters.
template <class F>
F mandelstam(const KinConfig<F>& cfg, const Word& P) {
  if (P.empty()) throw std::invalid_argument("mandelstam of the empty word");
  if (!P.distinct_letters()) throw std::invalid_argument("mandelstam: repeated letters in " + P.str());
  F acc = field_traits<F>::zero();
  const F two = field_traits<F>::from_int(2);
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j)
      acc += two * cfg.nu * cfg.particle(P[i]).k.dot(cfg.particle(P[j]).k);
  return acc;
}

// Equivalent form nu*(|k_P|^2 - sum_p |k_p|^2), kept as an independent oracle.
template <class F>
F mandelstam_norm_form(const KinConfig<F>& cfg, const Word& P) {
  F acc = cfg.momentum(P).norm2();
  for (Letter p : P) acc -= cfg.particle(p).k.norm2();
  return cfg.nu * acc;
}

template <class F>
F mandelstam_checked(const KinConfig<F>& cfg, const Word& P) {
  F s = mandelstam(cfg, P);
  if (field_traits<F>::is_zero(s)) throw SPoleError(P);
  return s;
}

// Checks transversality, dispersion consistency, momentum conservation when
// flagged, and non-vanishing of every s_P over sub-words of 12...(n-1).
template <class F>
ValidationReport validate(const KinConfig<F>& cfg) {
  ValidationReport rep;
  const int n = cfg.n();
  for (int p = 1; p <= n; ++p) {
    const auto& pt = cfg.particle(p);
    rep.record("transversality eps_" + std::to_string(p),
               field_traits<F>::is_zero(pt.eps.dot(pt.k)));
    rep.record("transversality eps_bar_" + std::to_string(p),
               field_traits<F>::is_zero(pt.eps_bar.dot(pt.k)));
    // omega is derived, so the dispersion relation holds structurally; the
    // check guards against future representations that store energies.
    F residual = field_traits<F>::i() * omega(cfg, p) + cfg.nu * pt.k.norm2();
    rep.record("dispersion particle " + std::to_string(p), field_traits<F>::is_zero(residual));
  }
  if (cfg.conserve_momentum && n >= 1) {
    Vec3<F> total;
    for (int p = 1; p <= n; ++p) total += cfg.particle(p).k;
    rep.record("momentum conservation", total.is_zero());
  }
  // Every non-empty sub-word of 12...(n-1) with >= 2 letters must have
  // non-vanishing s_P (these are the propagator denominators).
  const int m = n - 1;
  if (m >= 2) {
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<Letter> ls;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1u) ls.push_back(i + 1);
      if (ls.size() < 2) continue;
      Word P{std::vector<Letter>(ls)};
      rep.record("s_" + P.str() + " != 0",
                 !field_traits<F>::is_zero(mandelstam(cfg, P)));
    }
  } else if (n == 2) {
    // Degenerate two-particle configs: the 12 channel is the only denominator.
    Word P{1, 2};
    rep.record("s_12 != 0", !field_traits<F>::is_zero(mandelstam(cfg, P)));
  }
  return rep;
}

inline KinConfig<FloatScalar> to_float_config(const KinConfig<ExactScalar>& cfg) {
  auto conv = [](const ExactScalar& x) {
    return FloatScalar(x.re.convert_to<double>(), x.im.convert_to<double>());
  };
  auto conv3 = [&](const Vec3<ExactScalar>& v) {
    return Vec3<FloatScalar>(conv(v.c[0]), conv(v.c[1]), conv(v.c[2]));
  };
  KinConfig<FloatScalar> out;
  out.nu = conv(cfg.nu);
  out.lambda = conv(cfg.lambda);
  out.kappa = conv(cfg.kappa);
  out.gamma = conv(cfg.gamma);
  out.conserve_momentum = cfg.conserve_momentum;
  for (const auto& pt : cfg.particles)
    out.particles.push_back(
        {conv3(pt.k), conv3(pt.eps), conv3(pt.eps_bar), pt.colour, pt.colour_bar});
  return out;
}

// Reference fixture used across tests: three particles in the plane with unit
// couplings, su(2) colour labels a_p = p.
inline KinConfig<ExactScalar> fixture_k3() {
  using S = ExactScalar;
  auto vec = [](long long x, long long y, long long z) {
    return Vec3<S>(S(x), S(y), S(z));
  };
  KinConfig<S> cfg;
  cfg.conserve_momentum = true;
  Particle<S> p1{vec(1, 0, 0), vec(0, 1, 0), vec(0, 1, 0), 1, 1};
  Particle<S> p2{vec(1, 1, 0), vec(0, 0, 1), vec(0, 0, 1), 2, 2};
  Particle<S> p3{vec(-2, -1, 0), vec(0, 0, 1), vec(0, 0, 1), 3, 3};
  cfg.particles = {p1, p2, p3};
  return cfg;
}

}  // namespace bgdc
