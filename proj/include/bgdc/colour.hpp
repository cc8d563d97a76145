#pragma once

// Colour Lie algebra data and nested colour factors.  The bi-adjoint theory
// takes two independent StructureConstants values; su(2) (Levi-Civita) is the
// built-in exact default, and any Jacobi-valid rational tensor is accepted.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgdc/report.hpp"
#include "bgdc/rng.hpp"
#include "bgdc/scalar.hpp"
#include "bgdc/trees.hpp"

namespace bgdc {

template <class F>
class StructureConstants {
 public:
  StructureConstants(int dim, std::string name)
      : d_(dim), name_(std::move(name)), f_(std::size_t(dim) * dim * dim, field_traits<F>::zero()) {
    if (dim < 1) throw std::invalid_argument("algebra dimension must be >= 1");
  }

  int dim() const { return d_; }
  const std::string& name() const { return name_; }

  // 1-based adjoint indices throughout.
  const F& f(int a, int b, int c) const { return f_[idx(a, b, c)]; }
  void set_f(int a, int b, int c, const F& v) { f_[idx(a, b, c)] = v; }

  // f~ = -2i f, the combination every colour-dressed recursion contracts with.
  F f_tilde(int a, int b, int c) const {
    return field_traits<F>::from_int(-2) * field_traits<F>::i() * f(a, b, c);
  }

 private:
  std::size_t idx(int a, int b, int c) const {
    if (a < 1 || a > d_ || b < 1 || b > d_ || c < 1 || c > d_)
      throw std::out_of_range("adjoint index out of range");
    return ((std::size_t(a) - 1) * d_ + (b - 1)) * d_ + (c - 1);
  }
  int d_;
  std::string name_;
  std::vector<F> f_;
};

template <class F>
using ColourVector = std::vector<F>;  // d components, adjoint index a at [a-1]

inline StructureConstants<ExactScalar> builtin_su2() {
  StructureConstants<ExactScalar> sc(3, "su2");
  const ExactScalar one(1);
  // f_{abc} = Levi-Civita epsilon_{abc}
  sc.set_f(1, 2, 3, one);
  sc.set_f(2, 3, 1, one);
  sc.set_f(3, 1, 2, one);
  sc.set_f(2, 1, 3, -one);
  sc.set_f(3, 2, 1, -one);
  sc.set_f(1, 3, 2, -one);
  return sc;
}

// Exact antisymmetry and Jacobi checks; failures name the offending indices.
template <class F>
ValidationReport validate_jacobi(const StructureConstants<F>& sc) {
  ValidationReport rep;
  const int d = sc.dim();
  bool anti_ok = true;
  for (int a = 1; a <= d && anti_ok; ++a)
    for (int b = 1; b <= d && anti_ok; ++b)
      for (int c = 1; c <= d && anti_ok; ++c)
        if (!field_traits<F>::is_zero(sc.f(a, b, c) + sc.f(b, a, c))) {
          rep.record("antisymmetry", false,
                     "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ")");
          anti_ok = false;
        }
  if (anti_ok) rep.record("antisymmetry", true);

  bool jac_ok = true;
  for (int a = 1; a <= d && jac_ok; ++a)
    for (int b = 1; b <= d && jac_ok; ++b)
      for (int c = 1; c <= d && jac_ok; ++c)
        for (int dd = 1; dd <= d && jac_ok; ++dd) {
          F acc = field_traits<F>::zero();
          for (int e = 1; e <= d; ++e)
            acc += sc.f(a, b, e) * sc.f(e, c, dd) + sc.f(b, c, e) * sc.f(e, a, dd) +
                   sc.f(c, a, e) * sc.f(e, b, dd);
          if (!field_traits<F>::is_zero(acc)) {
            rep.record("jacobi", false,
                       "(a,b,c,d)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + "," + std::to_string(dd) + ")");
            jac_ok = false;
          }
        }
  if (jac_ok) rep.record("jacobi", true);
  return rep;
}

// Nested colour factor of a bracket tree: leaves are Kronecker deltas onto
// the particle's colour label, inner nodes contract with f~.
template <class F>
ColourVector<F> colour_factor(const StructureConstants<F>& sc,
                              const std::map<Letter, int>& assignment, const BracketTree& t) {
  const int d = sc.dim();
  if (t.is_leaf()) {
    auto it = assignment.find(t.letter());
    if (it == assignment.end())
      throw std::invalid_argument("no colour label for particle " + std::to_string(t.letter()));
    if (it->second < 1 || it->second > d)
      throw std::invalid_argument("colour label out of range for particle " +
                                  std::to_string(t.letter()));
    ColourVector<F> out(std::size_t(d), field_traits<F>::zero());
    out[std::size_t(it->second) - 1] = field_traits<F>::one();
    return out;
  }
  ColourVector<F> L = colour_factor(sc, assignment, t.left());
  ColourVector<F> R = colour_factor(sc, assignment, t.right());
  ColourVector<F> out(std::size_t(d), field_traits<F>::zero());
  for (int b = 1; b <= d; ++b) {
    if (field_traits<F>::is_zero(L[std::size_t(b) - 1])) continue;
    for (int c = 1; c <= d; ++c) {
      if (field_traits<F>::is_zero(R[std::size_t(c) - 1])) continue;
      const F lr = L[std::size_t(b) - 1] * R[std::size_t(c) - 1];
      for (int a = 1; a <= d; ++a) {
        F ft = sc.f_tilde(b, c, a);
        if (!field_traits<F>::is_zero(ft)) out[std::size_t(a) - 1] += ft * lr;
      }
    }
  }
  return out;
}

// A random Jacobi-valid rational algebra: su(2) conjugated by a seeded
// invertible integer matrix M (a basis change preserves the Lie axioms).
// f'_{ab}^c = M_a^p M_b^q f_{pq}^r (M^{-1})_r^c, computed exactly.
inline StructureConstants<ExactScalar> random_jacobi_algebra(std::uint64_t seed) {
  DetRng rng(seed);
  Rational M[3][3];
  Rational det;
  for (int tries = 0;; ++tries) {
    if (tries > 64) throw std::runtime_error("could not draw an invertible basis change");
    for (auto& row : M)
      for (auto& x : row) x = Rational(rng.bounded(-3, 3));
    det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
          M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
          M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    if (det != 0) break;
  }
  // Inverse via the adjugate: inv[i][j] = cofactor(j,i) / det.
  Rational inv[3][3];
  auto cof = [&](int i, int j) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    return M[r0][c0] * M[r1][c1] - M[r0][c1] * M[r1][c0];
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv[i][j] = cof(j, i) / det;

  auto su2 = builtin_su2();
  StructureConstants<ExactScalar> out(3, "su2-conjugated-" + std::to_string(seed));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        Rational acc(0);
        for (int p = 1; p <= 3; ++p)
          for (int q = 1; q <= 3; ++q)
            for (int r = 1; r <= 3; ++r) {
              const ExactScalar& fv = su2.f(p, q, r);
              if (fv.is_zero()) continue;
              acc += M[a - 1][p - 1] * M[b - 1][q - 1] * fv.re * inv[r - 1][c - 1];
            }
        out.set_f(a, b, c, ExactScalar(acc));
      }
  return out;
}

// Asserts colour_factor(Q l[R]) + colour_factor(R l[Q]) = 0 componentwise for
// every order-k constraint over the assigned letters.
template <class F>
ValidationReport check_gen_jacobi_colour(const StructureConstants<F>& sc,
                                         const std::map<Letter, int>& assignment, int k) {
  ValidationReport rep;
  std::vector<Letter> alphabet;
  for (const auto& [p, a] : assignment) alphabet.push_back(p);
  auto constraints = gen_jacobi_constraints(k, alphabet);
  std::size_t checked = 0;
  for (const auto& jc : constraints) {
    ColourVector<F> acc(std::size_t(sc.dim()), field_traits<F>::zero());
    auto accumulate = [&](const std::vector<std::pair<BracketTree, long long>>& side) {
      for (const auto& [t, c] : side) {
        ColourVector<F> v = colour_factor(sc, assignment, t);
        const F cf = field_traits<F>::from_int(c);
        for (std::size_t a = 0; a < acc.size(); ++a) acc[a] += cf * v[a];
      }
    };
    accumulate(jc.lhs);
    accumulate(jc.rhs);
    ++checked;
    bool zero = true;
    for (const auto& x : acc) zero = zero && field_traits<F>::is_zero(x);
    if (!zero)
      rep.record("colour Jacobi order " + std::to_string(k), false,
                 "Q=" + jc.Q.str() + " R=" + jc.R.str());
  }
  if (rep.pass)
    rep.record("colour Jacobi order " + std::to_string(k) + " (" + std::to_string(checked) +
                   " constraints)",
               true);
  return rep;
}

inline StructureConstants<FloatScalar> to_float_algebra(const StructureConstants<ExactScalar>& sc) {
  StructureConstants<FloatScalar> out(sc.dim(), sc.name());
  for (int a = 1; a <= sc.dim(); ++a)
    for (int b = 1; b <= sc.dim(); ++b)
      for (int c = 1; c <= sc.dim(); ++c) {
        const auto& v = sc.f(a, b, c);
        out.set_f(a, b, c, FloatScalar(v.re.convert_to<double>(), v.im.convert_to<double>()));
      }
  return out;
}

}  // namespace bgdc
