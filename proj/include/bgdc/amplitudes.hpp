#pragma once

// Partial, full, and tensor amplitudes; master numerators; the momentum
// kernel; Kleiss-Kuijf, kernel-inverse, and KLT checks.
//
// The momentum-kernel and master-numerator representations of the tensor
// amplitude hold at unit couplings (lambda = kappa = gamma = 1), which is
// where every suite that exercises them runs.  The global sign sigma_n in
// those representations is calibrated empirically by the convention audit
// and recorded in sigma_n() below; it is never assumed.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgdc/colour.hpp"
#include "bgdc/currents.hpp"
#include "bgdc/kinematics.hpp"
#include "bgdc/numerators.hpp"
#include "bgdc/report.hpp"
#include "bgdc/words.hpp"

namespace bgdc {

// A(W n) = s_W * u_W . eps_n with W the ordering's first n-1 letters; the
// ordering must end at the last particle and visit every other one once.
template <class F>
F partial_amplitude(CurrentEngine<F>& eng, const Word& ordering, bool barred = false) {
  const auto& cfg = eng.config();
  const int n = cfg.n();
  if (int(ordering.size()) != n || ordering[ordering.size() - 1] != n ||
      !ordering.is_permutation_of(word_range(1, n)))
    throw std::invalid_argument("ordering must visit 1..n once and end at " + std::to_string(n) +
                                ", got " + ordering.str());
  const Word W = ordering.subword(0, std::size_t(n) - 1);
  const F s = mandelstam(cfg, W);
  const auto& pt = cfg.particle(n);
  return s * eng.cs(W, barred).dot(barred ? pt.eps_bar : pt.eps);
}

// A(Q 1 R n) = (-1)^{|Q|} A(1 (Q~ shuffle R) n), Q~ the transpose of Q.
template <class F>
ValidationReport kleiss_kuijf_check(CurrentEngine<F>& eng, const Word& Q, const Word& R) {
  const auto& cfg = eng.config();
  const int n = cfg.n();
  ValidationReport rep;
  Word lhs_ordering = Q.concat(Word::single(1)).concat(R).append(n);
  F lhs = partial_amplitude(eng, lhs_ordering);
  F rhs = field_traits<F>::zero();
  for (const auto& [w, mult] : shuffle(transpose(Q), R)) {
    Word ordering = w.prepend(1).append(n);
    rhs += partial_amplitude(eng, ordering) * field_traits<F>::from_int(mult);
  }
  if (Q.size() % 2 == 1) rhs = -rhs;
  rep.record("KK " + lhs_ordering.str(), field_traits<F>::eq(lhs, rhs),
             "lhs=" + field_traits<F>::str(lhs) + " rhs=" + field_traits<F>::str(rhs));
  return rep;
}

// Full colour-dressed amplitude, computed over BOTH representations:
//   (a) (i/2)^{n-2} * s * u^{a_n}(colour-dressed current) . eps_n
//   (b) (i/2)^{n-2} * sum_P c^{a_n}_{l[1P]} A(1Pn)
// Returns (a); throws if the two disagree.
template <class F>
F full_amplitude(CurrentEngine<F>& eng) {
  const auto& cfg = eng.config();
  const int n = cfg.n();
  if (n < 3) throw std::invalid_argument("full amplitude needs n >= 3");
  const Word W = word_range(1, n - 1);
  const F s = mandelstam(cfg, W);
  const int a_n = cfg.particle(n).colour;
  const F bridge = scalar_pow(field_traits<F>::i() / field_traits<F>::from_int(2), n - 2);

  const ColourVec3<F>& u = eng.cd(W);
  F path_a = bridge * s * u[std::size_t(a_n) - 1].dot(cfg.particle(n).eps);

  F path_b = field_traits<F>::zero();
  for (const Word& P : permutations_of(word_range(2, n - 1))) {
    Word oneP = P.prepend(1);
    ColourVector<F> cf = colour_factor(eng.algebra(), eng.assignment(), left_bracketing(oneP));
    if (field_traits<F>::is_zero(cf[std::size_t(a_n) - 1])) continue;
    path_b += cf[std::size_t(a_n) - 1] * partial_amplitude(eng, oneP.append(n));
  }
  path_b = bridge * path_b;

  if (!field_traits<F>::eq(path_a, path_b))
    throw std::runtime_error("colour decomposition paths disagree: current path " +
                             field_traits<F>::str(path_a) + " vs partial-amplitude path " +
                             field_traits<F>::str(path_b));
  return path_a;
}

// ---- momentum kernel ----

// One entry by the single-chain recursion
//   S(<>|<>)_p = 1,  S(Pq | TqU)_p = 2 nu k_q . (k_p + k_T) S(P | TU)_p ;
// each step strips the last letter of the left word, so an entry costs
// O(|P|^2) with no memoization.
template <class F>
F kernel_entry(const KinConfig<F>& cfg, Letter anchor, const Word& P, const Word& Q) {
  if (P.size() != Q.size() || !P.is_permutation_of(Q))
    throw std::invalid_argument("kernel entries need equal-letter permutations");
  F acc = field_traits<F>::one();
  const F two_nu = field_traits<F>::from_int(2) * cfg.nu;
  std::vector<Letter> left = P.letters();
  std::vector<Letter> right = Q.letters();
  while (!left.empty()) {
    Letter q = left.back();
    left.pop_back();
    Vec3<F> k_front = cfg.particle(anchor).k;
    std::size_t pos = right.size();
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (right[j] == q) {
        pos = j;
        break;
      }
      k_front += cfg.particle(right[j]).k;
    }
    right.erase(right.begin() + long(pos));
    acc = acc * two_nu * cfg.particle(q).k.dot(k_front);
  }
  return acc;
}

template <class F>
struct KernelMatrix {
  Letter anchor;
  std::vector<Word> perms;        // permutations of the letters, ascending
  std::vector<std::vector<F>> S;  // S[i][j] = S(perms[i] | perms[j])_anchor

  const F& at(const Word& P, const Word& Q) const {
    return S[index(P)][index(Q)];
  }
  std::size_t index(const Word& P) const {
    auto it = std::lower_bound(perms.begin(), perms.end(), P);
    if (it == perms.end() || !(*it == P)) throw std::invalid_argument("unknown permutation " + P.str());
    return std::size_t(it - perms.begin());
  }
};

// Full kernel over the permutations of 2..(n-1), anchored at particle 1 by
// default.
template <class F>
KernelMatrix<F> momentum_kernel(const KinConfig<F>& cfg, Letter anchor = 1) {
  KernelMatrix<F> km;
  km.anchor = anchor;
  km.perms = permutations_of(word_range(2, cfg.n() - 1));
  const std::size_t m = km.perms.size();
  km.S.assign(m, std::vector<F>(m, field_traits<F>::zero()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      km.S[i][j] = kernel_entry(cfg, anchor, km.perms[i], km.perms[j]);
  return km;
}

// sum_R u_{1P|1R} S(R|Q)_1 = gamma^{n-2} delta_{P,Q}, plus kernel symmetry.
template <class F>
ValidationReport kernel_inverse_check(CurrentEngine<F>& eng) {
  const auto& cfg = eng.config();
  const int n = cfg.n();
  ValidationReport rep;
  KernelMatrix<F> km = momentum_kernel(cfg, 1);
  const std::size_t m = km.perms.size();

  bool symmetric = true;
  for (std::size_t i = 0; i < m && symmetric; ++i)
    for (std::size_t j = i + 1; j < m && symmetric; ++j)
      if (!field_traits<F>::eq(km.S[i][j], km.S[j][i])) {
        rep.record("kernel symmetry", false,
                   km.perms[i].str() + "|" + km.perms[j].str());
        symmetric = false;
      }
  if (symmetric) rep.record("kernel symmetry", true);

  const F expect_diag = scalar_pow(cfg.gamma, n - 2);
  bool inverse_ok = true;
  for (std::size_t i = 0; i < m && inverse_ok; ++i) {
    Word oneP = km.perms[i].prepend(1);
    for (std::size_t j = 0; j < m && inverse_ok; ++j) {
      F acc = field_traits<F>::zero();
      for (std::size_t r = 0; r < m; ++r) {
        Word oneR = km.perms[r].prepend(1);
        acc += eng.dbl(oneP, oneR) * km.S[r][j];
      }
      const F expect = i == j ? expect_diag : field_traits<F>::zero();
      if (!field_traits<F>::eq(acc, expect)) {
        rep.record("kernel inverse", false,
                   "P=" + km.perms[i].str() + " Q=" + km.perms[j].str() + " got " +
                       field_traits<F>::str(acc));
        inverse_ok = false;
      }
    }
  }
  if (inverse_ok) rep.record("kernel inverse (" + std::to_string(m * m) + " entries)", true);
  return rep;
}

// Master numerator nbar_{l[1P]n} = epsbar_{l[1P]} . epsbar_n.
template <class F>
F master_numerator(const KinConfig<F>& cfg, const Word& P) {
  Word oneP = P.prepend(1);
  return numerator(cfg, left_bracketing(oneP), /*barred=*/true)
      .cov.dot(cfg.particle(cfg.n()).eps_bar);
}

// Global sign of the master-numerator and momentum-kernel representations,
// as calibrated by the convention audit (measured +1 at every n checked,
// n = 3..6; the audit suite re-derives it on every run).
inline int sigma_n(int /*n*/) { return +1; }

enum class TensorMethod { direct, master, klt };

inline std::string tensor_method_name(TensorMethod m) {
  switch (m) {
    case TensorMethod::direct: return "direct";
    case TensorMethod::master: return "master";
    case TensorMethod::klt: return "klt";
  }
  return "?";
}

// Tensor (bi-fluid) amplitude by three routes:
//   direct — s * epsbar_n . u(dc current) . eps_n
//   master — sigma_n (1/2)^{n-2} sum_P nbar_{l[1P]n} A(1Pn)
//   klt    — sigma_n (1/2)^{n-2} sum_{P,Q} (1/s_{1P}) Abar(1Pn) S(P|Q)_1 A(1Qn)
template <class F>
F tensor_amplitude(CurrentEngine<F>& eng, TensorMethod method) {
  const auto& cfg = eng.config();
  const int n = cfg.n();
  if (n < 3) throw std::invalid_argument("tensor amplitude needs n >= 3");
  const Word W = word_range(1, n - 1);
  const F half_pow = scalar_pow(field_traits<F>::one() / field_traits<F>::from_int(2), n - 2);
  const F sign = field_traits<F>::from_int(sigma_n(n));

  switch (method) {
    case TensorMethod::direct: {
      const F s = mandelstam(cfg, W);
      const Mat3<F>& u = eng.dc(W);
      const auto& pt = cfg.particle(n);
      F val = field_traits<F>::zero();
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          val += pt.eps_bar.c[std::size_t(r)] * u[r][c] * pt.eps.c[std::size_t(c)];
      return s * val;
    }
    case TensorMethod::master: {
      F acc = field_traits<F>::zero();
      for (const Word& P : permutations_of(word_range(2, n - 1)))
        acc += master_numerator(cfg, P) * partial_amplitude(eng, P.prepend(1).append(n));
      return sign * half_pow * acc;
    }
    case TensorMethod::klt: {
      KernelMatrix<F> km = momentum_kernel(cfg, 1);
      const std::size_t m = km.perms.size();
      std::vector<F> A(m), Abar(m), s1P(m);
      for (std::size_t i = 0; i < m; ++i) {
        Word ordering = km.perms[i].prepend(1).append(n);
        A[i] = partial_amplitude(eng, ordering, /*barred=*/false);
        Abar[i] = partial_amplitude(eng, ordering, /*barred=*/true);
        s1P[i] = mandelstam(cfg, km.perms[i].prepend(1));
      }
      F acc = field_traits<F>::zero();
      for (std::size_t i = 0; i < m; ++i) {
        F rowacc = field_traits<F>::zero();
        for (std::size_t j = 0; j < m; ++j) rowacc += km.S[i][j] * A[j];
        acc += Abar[i] / s1P[i] * rowacc;
      }
      return sign * half_pow * acc;
    }
  }
  throw std::logic_error("unreachable");
}

// Per-config measurement of the global sign: direct / unsigned master and
// direct / unsigned klt.  Feeds the convention audit.
template <class F>
struct SigmaMeasurement {
  F ratio_master;
  F ratio_klt;
};

template <class F>
SigmaMeasurement<F> measure_sigma(CurrentEngine<F>& eng) {
  const F direct = tensor_amplitude(eng, TensorMethod::direct);
  const F sign = field_traits<F>::from_int(sigma_n(eng.config().n()));
  // tensor_amplitude applies sigma_n; divide it back out to get the raw form.
  const F master = tensor_amplitude(eng, TensorMethod::master) / sign;
  const F klt = tensor_amplitude(eng, TensorMethod::klt) / sign;
  if (field_traits<F>::is_zero(master) || field_traits<F>::is_zero(klt))
    throw std::runtime_error("degenerate sigma measurement: vanishing amplitude");
  return {direct / master, direct / klt};
}

// epsbar_{l[1Q]} = sum_P S(Q|P)_1 ubar_{1P}: numerators recovered from
// barred colour-stripped currents through the kernel.
template <class F>
ValidationReport numerator_recovery_check(CurrentEngine<F>& eng) {
  const auto& cfg = eng.config();
  ValidationReport rep;
  KernelMatrix<F> km = momentum_kernel(cfg, 1);
  bool ok = true;
  for (std::size_t i = 0; i < km.perms.size() && ok; ++i) {
    Vec3<F> lhs = numerator(cfg, left_bracketing(km.perms[i].prepend(1)), /*barred=*/true).cov;
    Vec3<F> rhs;
    for (std::size_t j = 0; j < km.perms.size(); ++j)
      rhs += eng.cs(km.perms[j].prepend(1), /*barred=*/true).scaled(km.S[i][j]);
    if (!values_eq(lhs, rhs)) {
      rep.record("numerator recovery", false, "Q=" + km.perms[i].str());
      ok = false;
    }
  }
  if (ok) rep.record("numerator recovery (" + std::to_string(km.perms.size()) + " words)", true);
  return rep;
}

// Current-level KLT: the tensor current of 12...(n-1) equals
// sigma_n (1/2)^{n-2} sum_{P,Q} ubar_{1P} (x) S(P|Q)_1 u_{1Q} componentwise.
template <class F>
ValidationReport current_klt_check(CurrentEngine<F>& eng) {
  const auto& cfg = eng.config();
  const int n = cfg.n();
  ValidationReport rep;
  const Word W = word_range(1, n - 1);
  KernelMatrix<F> km = momentum_kernel(cfg, 1);
  const std::size_t m = km.perms.size();
  Mat3<F> rhs{};
  for (std::size_t i = 0; i < m; ++i) {
    const Vec3<F>& ub = eng.cs(km.perms[i].prepend(1), /*barred=*/true);
    for (std::size_t j = 0; j < m; ++j) {
      const Vec3<F>& u = eng.cs(km.perms[j].prepend(1), /*barred=*/false);
      const F& Sij = km.S[i][j];
      if (field_traits<F>::is_zero(Sij)) continue;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          rhs[r][c] += Sij * ub.c[std::size_t(r)] * u.c[std::size_t(c)];
    }
  }
  const F scale = field_traits<F>::from_int(sigma_n(n)) *
                  scalar_pow(field_traits<F>::one() / field_traits<F>::from_int(2), n - 2);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) rhs[r][c] = rhs[r][c] * scale;
  rep.record("current-level KLT n=" + std::to_string(n), values_eq(eng.dc(W), rhs));
  return rep;
}

// Colour decomposition of the colour-dressed current itself:
// u^a_W = sum_{sigma} c^a_{l[w sigma]} u_{w sigma}, w = min letter of W.
template <class F>
ValidationReport cd_decomposition_check(CurrentEngine<F>& eng, const Word& W) {
  ValidationReport rep;
  if (!W.strictly_increasing())
    throw std::invalid_argument("decomposition check needs an ordered word");
  ColourVec3<F> rhs(std::size_t(eng.algebra().dim()));
  const Letter w0 = W[0];
  Word rest = W.subword(1, W.size() - 1);
  for (const Word& sigma : permutations_of(rest)) {
    Word ws = sigma.prepend(w0);
    ColourVector<F> cf = colour_factor(eng.algebra(), eng.assignment(), left_bracketing(ws));
    const Vec3<F>& u = eng.cs(ws);
    for (std::size_t a = 0; a < rhs.size(); ++a)
      if (!field_traits<F>::is_zero(cf[a])) rhs[a] += u.scaled(cf[a]);
  }
  rep.record("cd decomposition " + W.str(), values_eq(eng.cd(W), rhs));
  return rep;
}

}  // namespace bgdc
