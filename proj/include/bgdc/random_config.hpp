#pragma once

// Deterministic generation of exact random kinematic configurations.
// All constraints are solved exactly: polarizations are projected transverse
// in rational arithmetic, and configurations with any vanishing propagator
// denominator are regenerated wholesale (never perturbed), so a seed always
// maps to the same config.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "bgdc/kinematics.hpp"
#include "bgdc/rng.hpp"

namespace bgdc {

// Thrown when the generator cannot satisfy the non-degeneracy constraints
// within its retry budget; carries the last colliding sub-word.
struct GenerationError : std::runtime_error {
  Word colliding;
  GenerationError(const Word& P, int attempts)
      : std::runtime_error("kinematics generation failed after " +
                           std::to_string(attempts) + " attempts; s_" + P.str() +
                           " kept vanishing"),
        colliding(P) {}
};

struct RandomOptions {
  bool conserve_momentum = true;
  bool complex_momenta = false;
  int max_component = 6;    // momentum numerators drawn from [-max, max]
  int max_denominator = 2;  // denominators drawn from [1, max]
  int colour_dim = 3;       // colour labels drawn from [1, dim]
  int max_retries = 256;
};

namespace detail {

inline Rational draw_rational(DetRng& rng, const RandomOptions& opt) {
  long long num = rng.bounded(-opt.max_component, opt.max_component);
  long long den = rng.bounded(1, opt.max_denominator);
  return Rational(num, den);
}

inline ExactScalar draw_scalar(DetRng& rng, const RandomOptions& opt, bool complex_part) {
  Rational re = draw_rational(rng, opt);
  Rational im = complex_part ? draw_rational(rng, opt) : Rational(0);
  return ExactScalar(std::move(re), std::move(im));
}

inline Vec3<ExactScalar> draw_vec(DetRng& rng, const RandomOptions& opt, bool complex_part) {
  return {draw_scalar(rng, opt, complex_part), draw_scalar(rng, opt, complex_part),
          draw_scalar(rng, opt, complex_part)};
}

// Non-null momentum with k.k != 0 (the projector below needs it).
inline bool draw_momentum(DetRng& rng, const RandomOptions& opt, Vec3<ExactScalar>& out) {
  for (int t = 0; t < 32; ++t) {
    Vec3<ExactScalar> v = draw_vec(rng, opt, opt.complex_momenta);
    if (!v.is_zero() && !v.norm2().is_zero()) {
      out = v;
      return true;
    }
  }
  return false;
}

// eps = v - ((v.k)/(k.k)) k is exactly transverse; redraw v until nonzero.
inline bool draw_transverse(DetRng& rng, const RandomOptions& opt, const Vec3<ExactScalar>& k,
                            Vec3<ExactScalar>& out) {
  for (int t = 0; t < 32; ++t) {
    Vec3<ExactScalar> v = draw_vec(rng, opt, false);
    Vec3<ExactScalar> eps = v - k.scaled(v.dot(k) / k.norm2());
    if (!eps.is_zero()) {
      out = eps;
      return true;
    }
  }
  return false;
}

}  // namespace detail

inline KinConfig<ExactScalar> random_kinematics(int n, std::uint64_t seed,
                                                const RandomOptions& opt = {}) {
  if (n < 3) throw std::invalid_argument("random_kinematics requires n >= 3");
  DetRng rng(seed);
  Word last_collision;
  for (int attempt = 0; attempt < opt.max_retries; ++attempt) {
    KinConfig<ExactScalar> cfg;
    cfg.conserve_momentum = opt.conserve_momentum;
    cfg.particles.resize(std::size_t(n));

    bool ok = true;
    const int free_momenta = opt.conserve_momentum ? n - 1 : n;
    Vec3<ExactScalar> total;
    for (int p = 0; p < free_momenta && ok; ++p) {
      ok = detail::draw_momentum(rng, opt, cfg.particles[std::size_t(p)].k);
      total += cfg.particles[std::size_t(p)].k;
    }
    if (ok && opt.conserve_momentum) {
      Vec3<ExactScalar> kn = -total;
      ok = !kn.is_zero() && !kn.norm2().is_zero();
      cfg.particles[std::size_t(n) - 1].k = kn;
    }
    for (int p = 0; p < n && ok; ++p) {
      auto& pt = cfg.particles[std::size_t(p)];
      ok = detail::draw_transverse(rng, opt, pt.k, pt.eps) &&
           detail::draw_transverse(rng, opt, pt.k, pt.eps_bar);
      pt.colour = int(rng.bounded(1, opt.colour_dim));
      pt.colour_bar = int(rng.bounded(1, opt.colour_dim));
    }
    if (!ok) continue;

    // Every sub-word of 12...(n-1) with >= 2 letters is a potential
    // propagator denominator; reject the whole config on any collision.
    bool degenerate = false;
    const int m = n - 1;
    for (std::uint32_t mask = 1; mask < (1u << m) && !degenerate; ++mask) {
      std::vector<Letter> ls;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1u) ls.push_back(i + 1);
      if (ls.size() < 2) continue;
      Word P{std::vector<Letter>(ls)};
      if (mandelstam(cfg, P).is_zero()) {
        last_collision = P;
        degenerate = true;
      }
    }
    if (degenerate) continue;
    return cfg;
  }
  throw GenerationError(last_collision, opt.max_retries);
}

}  // namespace bgdc
