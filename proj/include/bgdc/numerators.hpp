#pragma once

// The kinematic Lie algebra: brackets of polarization/momentum pairs and
// tree-indexed kinematic numerators.  The bracket
//   [x, y].cov = (x.cov . y.mom) y.cov - (y.cov . x.mom) x.cov
//   [x, y].mom = x.mom + y.mom
// is the Fourier image of the vector-field bracket, so it satisfies the
// Jacobi identity exactly; carrying the accumulated momentum inside the
// element makes that literally testable on the data type.

#include <string>
#include <vector>

#include "bgdc/kinematics.hpp"
#include "bgdc/report.hpp"
#include "bgdc/trees.hpp"

namespace bgdc {

template <class F>
struct KinElement {
  Vec3<F> cov;  // the covector slot (polarization-like)
  Vec3<F> mom;  // total momentum of the constituents
};

template <class F>
KinElement<F> kin_bracket(const KinElement<F>& x, const KinElement<F>& y) {
  KinElement<F> out;
  out.cov = y.cov.scaled(x.cov.dot(y.mom)) - x.cov.scaled(y.cov.dot(x.mom));
  out.mom = x.mom + y.mom;
  return out;
}

// Numerator evaluation with an injectable bracket, so validation suites can
// demonstrate sensitivity to a broken bracket.
template <class F, class Bracket>
KinElement<F> numerator_with(const KinConfig<F>& cfg, const BracketTree& t, Bracket&& br,
                             bool barred = false) {
  if (t.is_leaf()) {
    const auto& pt = cfg.particle(t.letter());
    return {barred ? pt.eps_bar : pt.eps, pt.k};
  }
  return br(numerator_with(cfg, t.left(), br, barred),
            numerator_with(cfg, t.right(), br, barred));
}

template <class F>
KinElement<F> numerator(const KinConfig<F>& cfg, const BracketTree& t, bool barred = false) {
  return numerator_with(cfg, t, kin_bracket<F>, barred);
}

// Asserts numerator(Q l[R]) + numerator(R l[Q]) = 0 (covector part) for every
// order-k constraint over the config's letters.
template <class F, class Bracket>
ValidationReport check_gen_jacobi_with(const KinConfig<F>& cfg, int k, Bracket&& br,
                                       bool barred = false) {
  ValidationReport rep;
  std::vector<Letter> alphabet;
  for (Letter p = 1; p <= cfg.n(); ++p) alphabet.push_back(p);
  auto constraints = gen_jacobi_constraints(k, alphabet);
  std::size_t checked = 0;
  for (const auto& jc : constraints) {
    Vec3<F> acc;
    for (const auto& [t, c] : jc.lhs)
      acc += numerator_with(cfg, t, br, barred).cov.scaled(field_traits<F>::from_int(c));
    for (const auto& [t, c] : jc.rhs)
      acc += numerator_with(cfg, t, br, barred).cov.scaled(field_traits<F>::from_int(c));
    ++checked;
    if (!acc.is_zero())
      rep.record("kinematic Jacobi order " + std::to_string(k), false,
                 "Q=" + jc.Q.str() + " R=" + jc.R.str());
  }
  if (rep.pass)
    rep.record("kinematic Jacobi order " + std::to_string(k) + " (" +
                   std::to_string(checked) + " constraints)",
               true);
  return rep;
}

template <class F>
ValidationReport check_gen_jacobi(const KinConfig<F>& cfg, int k, bool barred = false) {
  return check_gen_jacobi_with(cfg, k, kin_bracket<F>, barred);
}

}  // namespace bgdc
