#pragma once

// Berends-Giele currents for all five families, each computable two ways:
//
//   direct      — the defining recursions (normative ground truth):
//                 colour-stripped  u_P   = (lambda/s_P) sum_{P=QR} {...}
//                 colour-dressed   u^a_P = (lambda/s_P) sum_{P=QuR} (1/2) f~ {...}
//                 tensor           u_iibarP = (kappa/s_P) sum (1/2) {...}
//                 zeroth copy      u^aabar_P = (gamma/s_P) sum (1/4) f~ f~bar {...}
//                 double           u_{P|Q} = (gamma/s_P) sum_{P=RS} sum_{Q=TU} {...}
//   factorized  — (coupling * rho)^{|P|-1} * [[replacement]] o b_map(P), with
//                 per-vertex constants rho calibrated once and re-derived by
//                 the convention audit.
//
// Cross-path equality of the two is the module's central oracle.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bgdc/colour.hpp"
#include "bgdc/kinematics.hpp"
#include "bgdc/numerators.hpp"
#include "bgdc/trees.hpp"
#include "bgdc/words.hpp"

namespace bgdc {

enum class Theory { cs, cd, dc, zc };

inline std::string theory_name(Theory t) {
  switch (t) {
    case Theory::cs: return "cs";
    case Theory::cd: return "cd";
    case Theory::dc: return "dc";
    case Theory::zc: return "zc";
  }
  return "?";
}
inline Theory parse_theory(const std::string& s) {
  if (s == "cs") return Theory::cs;
  if (s == "cd") return Theory::cd;
  if (s == "dc") return Theory::dc;
  if (s == "zc") return Theory::zc;
  throw std::invalid_argument("unknown theory: " + s);
}

// Value containers: [barred][unbarred] for the tensor current, adjoint index
// a at [a-1] everywhere.
template <class F>
using Mat3 = std::array<std::array<F, 3>, 3>;

template <class F>
using ColourVec3 = std::vector<Vec3<F>>;

template <class F>
using ColourMatrix = std::vector<std::vector<F>>;

template <class F>
ColourMatrix<F> colour_matrix_zero(int d, int d_bar) {
  return ColourMatrix<F>(std::size_t(d),
                         std::vector<F>(std::size_t(d_bar), field_traits<F>::zero()));
}

template <class F>
bool values_eq(const F& a, const F& b) {
  return field_traits<F>::eq(a, b);
}
template <class F>
bool values_eq(const Vec3<F>& a, const Vec3<F>& b) {
  return field_traits<F>::eq(a.c[0], b.c[0]) && field_traits<F>::eq(a.c[1], b.c[1]) &&
         field_traits<F>::eq(a.c[2], b.c[2]);
}
template <class F>
bool values_eq(const Mat3<F>& a, const Mat3<F>& b) {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (!field_traits<F>::eq(a[r][c], b[r][c])) return false;
  return true;
}
template <class F>
bool values_eq(const ColourVec3<F>& a, const ColourVec3<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!values_eq(a[i], b[i])) return false;
  return true;
}
template <class F>
bool values_eq(const ColourMatrix<F>& a, const ColourMatrix<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!field_traits<F>::eq(a[i][j], b[i][j])) return false;
  }
  return true;
}

namespace detail {

// Quadratic vertices, one per theory, shared between the forward recursion
// and the residual checker so the two cannot drift apart.

template <class F>
Vec3<F> cs_vertex(const Vec3<F>& uQ, const Vec3<F>& uR, const Vec3<F>& kQ, const Vec3<F>& kR) {
  return uR.scaled(uQ.dot(kR)) - uQ.scaled(uR.dot(kQ));
}

template <class F>
ColourVec3<F> cd_vertex(const StructureConstants<F>& sc, const ColourVec3<F>& uQ,
                        const ColourVec3<F>& uR, const Vec3<F>& kQ, const Vec3<F>& kR) {
  const int d = sc.dim();
  ColourVec3<F> out(static_cast<std::size_t>(d));
  for (int b = 1; b <= d; ++b) {
    const Vec3<F>& uQb = uQ[std::size_t(b) - 1];
    for (int c = 1; c <= d; ++c) {
      const Vec3<F>& uRc = uR[std::size_t(c) - 1];
      Vec3<F> term = uRc.scaled(uQb.dot(kR)) - uQb.scaled(uRc.dot(kQ));
      if (term.is_zero()) continue;
      for (int a = 1; a <= d; ++a) {
        F ft = sc.f_tilde(b, c, a);
        if (!field_traits<F>::is_zero(ft)) out[std::size_t(a) - 1] += term.scaled(ft);
      }
    }
  }
  return out;
}

template <class F>
Mat3<F> dc_vertex(const Mat3<F>& uQ, const Mat3<F>& uR, const Vec3<F>& kQ, const Vec3<F>& kR) {
  // (k_R . u_Q . k_R) u_R  -  (u_R k_Q) (x) (k_R u_Q)
  F quad = field_traits<F>::zero();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) quad += kR.c[std::size_t(r)] * uQ[r][c] * kR.c[std::size_t(c)];
  std::array<F, 3> row{}, col{};  // (u_R k_Q)_ibar and (k_R u_Q)_i
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      row[std::size_t(r)] += uR[r][c] * kQ.c[std::size_t(c)];
      col[std::size_t(c)] += kR.c[std::size_t(r)] * uQ[r][c];
    }
  Mat3<F> out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      out[r][c] = quad * uR[r][c] - row[std::size_t(r)] * col[std::size_t(c)];
  return out;
}

template <class F>
ColourMatrix<F> zc_vertex(const StructureConstants<F>& sc, const StructureConstants<F>& sc_bar,
                          const ColourMatrix<F>& zQ, const ColourMatrix<F>& zR) {
  const int d = sc.dim(), db = sc_bar.dim();
  ColourMatrix<F> out = colour_matrix_zero<F>(d, db);
  for (int b = 1; b <= d; ++b)
    for (int c = 1; c <= d; ++c) {
      bool any_f = false;
      for (int a = 1; a <= d && !any_f; ++a) any_f = !field_traits<F>::is_zero(sc.f(b, c, a));
      if (!any_f) continue;
      for (int bb = 1; bb <= db; ++bb) {
        const F& zQv = zQ[std::size_t(b) - 1][std::size_t(bb) - 1];
        if (field_traits<F>::is_zero(zQv)) continue;
        for (int cb = 1; cb <= db; ++cb) {
          const F& zRv = zR[std::size_t(c) - 1][std::size_t(cb) - 1];
          if (field_traits<F>::is_zero(zRv)) continue;
          const F prod = zQv * zRv;
          for (int a = 1; a <= d; ++a) {
            F ft = sc.f_tilde(b, c, a);
            if (field_traits<F>::is_zero(ft)) continue;
            for (int ab = 1; ab <= db; ++ab) {
              F ftb = sc_bar.f_tilde(bb, cb, ab);
              if (field_traits<F>::is_zero(ftb)) continue;
              out[std::size_t(a) - 1][std::size_t(ab) - 1] += ft * ftb * prod;
            }
          }
        }
      }
    }
  return out;
}

}  // namespace detail

template <class F>
class CurrentEngine {
 public:
  CurrentEngine(KinConfig<F> cfg, StructureConstants<F> sc, StructureConstants<F> sc_bar)
      : cfg_(std::move(cfg)), sc_(std::move(sc)), sc_bar_(std::move(sc_bar)) {
    for (Letter p = 1; p <= cfg_.n(); ++p) {
      assign_[p] = cfg_.particle(p).colour;
      assign_bar_[p] = cfg_.particle(p).colour_bar;
    }
  }
  CurrentEngine(KinConfig<F> cfg, StructureConstants<F> sc)
      : CurrentEngine(std::move(cfg), sc, sc) {}

  const KinConfig<F>& config() const { return cfg_; }
  const StructureConstants<F>& algebra() const { return sc_; }
  const StructureConstants<F>& algebra_bar() const { return sc_bar_; }
  const std::map<Letter, int>& assignment() const { return assign_; }
  const std::map<Letter, int>& assignment_bar() const { return assign_bar_; }

  // ---- direct recursions (normative) ----

  const Vec3<F>& cs(const Word& P, bool barred = false) {
    auto& memo = barred ? cs_bar_memo_ : cs_memo_;
    if (auto it = memo.find(P); it != memo.end()) return it->second;
    if (P.empty()) throw std::invalid_argument("current of the empty word");
    Vec3<F> val;
    if (P.size() == 1) {
      const auto& pt = cfg_.particle(P[0]);
      val = barred ? pt.eps_bar : pt.eps;
    } else {
      const F s = mandelstam_checked(cfg_, P);
      for (const auto& [Q, R] : deconcatenations(P))
        val += detail::cs_vertex(cs(Q, barred), cs(R, barred), cfg_.momentum(Q),
                                 cfg_.momentum(R));
      val = val.scaled(cfg_.lambda / s);
    }
    return memo.emplace(P, std::move(val)).first->second;
  }

  const ColourVec3<F>& cd(const Word& P) {
    if (auto it = cd_memo_.find(P); it != cd_memo_.end()) return it->second;
    require_ordered(P, "cd");
    ColourVec3<F> val(std::size_t(sc_.dim()));
    if (P.size() == 1) {
      val[std::size_t(colour_label(P[0])) - 1] = cfg_.particle(P[0]).eps;
    } else {
      const F s = mandelstam_checked(cfg_, P);
      ColourVec3<F> acc(std::size_t(sc_.dim()));
      for (const auto& [Q, R] : ordered_partitions(P)) {
        ColourVec3<F> v =
            detail::cd_vertex(sc_, cd(Q), cd(R), cfg_.momentum(Q), cfg_.momentum(R));
        for (std::size_t a = 0; a < acc.size(); ++a) acc[a] += v[a];
      }
      const F scale = cfg_.lambda / s / field_traits<F>::from_int(2);
      for (std::size_t a = 0; a < acc.size(); ++a) val[a] = acc[a].scaled(scale);
    }
    return cd_memo_.emplace(P, std::move(val)).first->second;
  }

  const Mat3<F>& dc(const Word& P) {
    if (auto it = dc_memo_.find(P); it != dc_memo_.end()) return it->second;
    require_ordered(P, "dc");
    Mat3<F> val{};
    if (P.size() == 1) {
      const auto& pt = cfg_.particle(P[0]);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          val[r][c] = pt.eps_bar.c[std::size_t(r)] * pt.eps.c[std::size_t(c)];
    } else {
      const F s = mandelstam_checked(cfg_, P);
      Mat3<F> acc{};
      for (const auto& [Q, R] : ordered_partitions(P)) {
        Mat3<F> v = detail::dc_vertex(dc(Q), dc(R), cfg_.momentum(Q), cfg_.momentum(R));
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) acc[r][c] += v[r][c];
      }
      const F scale = cfg_.kappa / s / field_traits<F>::from_int(2);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) val[r][c] = acc[r][c] * scale;
    }
    return dc_memo_.emplace(P, std::move(val)).first->second;
  }

  const ColourMatrix<F>& zc(const Word& P) {
    if (auto it = zc_memo_.find(P); it != zc_memo_.end()) return it->second;
    require_ordered(P, "zc");
    ColourMatrix<F> val = colour_matrix_zero<F>(sc_.dim(), sc_bar_.dim());
    if (P.size() == 1) {
      val[std::size_t(colour_label(P[0])) - 1][std::size_t(colour_label_bar(P[0])) - 1] =
          field_traits<F>::one();
    } else {
      const F s = mandelstam_checked(cfg_, P);
      ColourMatrix<F> acc = colour_matrix_zero<F>(sc_.dim(), sc_bar_.dim());
      for (const auto& [Q, R] : ordered_partitions(P)) {
        ColourMatrix<F> v = detail::zc_vertex(sc_, sc_bar_, zc(Q), zc(R));
        for (std::size_t a = 0; a < acc.size(); ++a)
          for (std::size_t ab = 0; ab < acc[a].size(); ++ab) acc[a][ab] += v[a][ab];
      }
      const F scale = cfg_.gamma / s / field_traits<F>::from_int(4);
      for (std::size_t a = 0; a < acc.size(); ++a)
        for (std::size_t ab = 0; ab < acc[a].size(); ++ab) val[a][ab] = acc[a][ab] * scale;
    }
    return zc_memo_.emplace(P, std::move(val)).first->second;
  }

  // Double currents u_{P|Q}; entries with differing letter sets are zero
  // identically (every summand carries a vanishing seed), so they are
  // returned without touching any denominator.
  const F& dbl(const Word& P, const Word& Q) {
    auto key = std::make_pair(P, Q);
    if (auto it = dbl_memo_.find(key); it != dbl_memo_.end()) return it->second;
    if (P.empty() || Q.empty()) throw std::invalid_argument("double current of an empty word");
    if (!P.distinct_letters() || !Q.distinct_letters())
      throw std::invalid_argument("double current needs distinct letters");
    F val = field_traits<F>::zero();
    if (!P.is_permutation_of(Q)) {
      // zero
    } else if (P.size() == 1) {
      val = field_traits<F>::one();  // P == Q here
    } else {
      const F s = mandelstam_checked(cfg_, P);
      F acc = field_traits<F>::zero();
      for (const auto& [R, S] : deconcatenations(P))
        for (const auto& [T, U] : deconcatenations(Q))
          acc += dbl(R, T) * dbl(S, U) - dbl(S, T) * dbl(R, U);
      val = cfg_.gamma / s * acc;
    }
    return dbl_memo_.emplace(std::move(key), std::move(val)).first->second;
  }

  // ---- tree-valued Berends-Giele maps ----

  const FormalSum<BracketTree, F>& b_cs(const Word& P) {
    if (auto it = bcs_memo_.find(P); it != bcs_memo_.end()) return it->second;
    FormalSum<BracketTree, F> val;
    if (P.empty()) throw std::invalid_argument("map of the empty word");
    if (P.size() == 1) {
      val.add(BracketTree::leaf(P[0]), field_traits<F>::one());
    } else {
      const F s = mandelstam_checked(cfg_, P);
      for (const auto& [Q, R] : deconcatenations(P))
        for (const auto& [tq, cq] : b_cs(Q).terms())
          for (const auto& [tr, cr] : b_cs(R).terms())
            val.add(BracketTree::node(tq, tr), cq * cr / s);
    }
    return bcs_memo_.emplace(P, std::move(val)).first->second;
  }

  const FormalSum<BracketTree, F>& b_cd(const Word& P) {
    if (auto it = bcd_memo_.find(P); it != bcd_memo_.end()) return it->second;
    require_ordered(P, "b_cd");
    FormalSum<BracketTree, F> val;
    if (P.size() == 1) {
      val.add(BracketTree::leaf(P[0]), field_traits<F>::one());
    } else {
      const F s = mandelstam_checked(cfg_, P);
      for (const auto& [Q, R] : ordered_partitions(P, /*unordered=*/true))
        for (const auto& [tq, cq] : b_cd(Q).terms())
          for (const auto& [tr, cr] : b_cd(R).terms())
            val.add(BracketTree::node(tq, tr), cq * cr / s);
    }
    return bcd_memo_.emplace(P, std::move(val)).first->second;
  }

  // ---- factorized representations ----

  Vec3<F> cs_factorized(const Word& P, bool barred = false) {
    Vec3<F> out;
    for (const auto& [t, c] : b_cs(P).terms())
      out += numerator(cfg_, t, barred).cov.scaled(c);
    return out.scaled(scalar_pow(cfg_.lambda, int(P.size()) - 1));
  }

  ColourVec3<F> cd_factorized(const Word& P) {
    ColourVec3<F> out(std::size_t(sc_.dim()));
    for (const auto& [t, c] : b_cd(P).terms()) {
      ColourVector<F> cf = colour_factor(sc_, assign_, t);
      Vec3<F> eps = numerator(cfg_, t).cov;
      for (std::size_t a = 0; a < out.size(); ++a)
        if (!field_traits<F>::is_zero(cf[a])) out[a] += eps.scaled(c * cf[a]);
    }
    const F scale = scalar_pow(cfg_.lambda, int(P.size()) - 1);
    for (auto& v : out) v = v.scaled(scale);
    return out;
  }

  Mat3<F> dc_factorized(const Word& P) {
    Mat3<F> out{};
    for (const auto& [t, c] : b_cd(P).terms()) {
      Vec3<F> eb = numerator(cfg_, t, /*barred=*/true).cov;
      Vec3<F> e = numerator(cfg_, t, /*barred=*/false).cov;
      for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 3; ++col)
          out[r][col] += c * eb.c[std::size_t(r)] * e.c[std::size_t(col)];
    }
    const F rho = cfg_.kappa / field_traits<F>::from_int(2);
    const F scale = scalar_pow(rho, int(P.size()) - 1);
    for (int r = 0; r < 3; ++r)
      for (int col = 0; col < 3; ++col) out[r][col] = out[r][col] * scale;
    return out;
  }

  ColourMatrix<F> zc_factorized(const Word& P) {
    ColourMatrix<F> out = colour_matrix_zero<F>(sc_.dim(), sc_bar_.dim());
    for (const auto& [t, c] : b_cd(P).terms()) {
      ColourVector<F> cf = colour_factor(sc_, assign_, t);
      ColourVector<F> cfb = colour_factor(sc_bar_, assign_bar_, t);
      for (std::size_t a = 0; a < out.size(); ++a) {
        if (field_traits<F>::is_zero(cf[a])) continue;
        for (std::size_t ab = 0; ab < out[a].size(); ++ab)
          out[a][ab] += c * cf[a] * cfb[ab];
      }
    }
    const F rho = cfg_.gamma / field_traits<F>::from_int(2);
    const F scale = scalar_pow(rho, int(P.size()) - 1);
    for (auto& rowv : out)
      for (auto& x : rowv) x = x * scale;
    return out;
  }

  // u_{P|Q} = gamma^{|P|-1} (P, b_cs(Q)), the map Lie-reduced to the anchored
  // left-nested basis and then expanded to words.
  F dbl_factorized(const Word& P, const Word& Q) {
    if (P.empty() || Q.empty()) throw std::invalid_argument("double current of an empty word");
    if (!P.is_permutation_of(Q)) return field_traits<F>::zero();
    if (P.size() == 1) return field_traits<F>::one();
    Letter anchor = Q.sorted()[0];
    FormalSum<Word, F> basis = lie_normalize(b_cs(Q), anchor);
    F acc = field_traits<F>::zero();
    for (const auto& [w, c] : basis.terms())
      for (const auto& [ew, ec] : tree_word_expansion(left_bracketing(w)))
        if (ew == P) acc += c * field_traits<F>::from_int(ec);
    return scalar_pow(cfg_.gamma, int(P.size()) - 1) * acc;
  }

  // Read-only views of the memo tables (snapshots for the residual checker).
  const std::map<Word, Vec3<F>>& cs_entries(bool barred = false) const {
    return barred ? cs_bar_memo_ : cs_memo_;
  }
  const std::map<Word, ColourVec3<F>>& cd_entries() const { return cd_memo_; }
  const std::map<Word, Mat3<F>>& dc_entries() const { return dc_memo_; }
  const std::map<Word, ColourMatrix<F>>& zc_entries() const { return zc_memo_; }
  const std::map<std::pair<Word, Word>, F>& dbl_entries() const { return dbl_memo_; }

 private:
  int colour_label(Letter p) const { return assign_.at(p); }
  int colour_label_bar(Letter p) const { return assign_bar_.at(p); }
  static void require_ordered(const Word& P, const char* who) {
    if (!P.strictly_increasing())
      throw std::invalid_argument(std::string(who) + " requires a strictly increasing word, got " +
                                  P.str());
  }

  KinConfig<F> cfg_;
  StructureConstants<F> sc_, sc_bar_;
  std::map<Letter, int> assign_, assign_bar_;

  std::map<Word, Vec3<F>> cs_memo_, cs_bar_memo_;
  std::map<Word, ColourVec3<F>> cd_memo_;
  std::map<Word, Mat3<F>> dc_memo_;
  std::map<Word, ColourMatrix<F>> zc_memo_;
  std::map<std::pair<Word, Word>, F> dbl_memo_;
  std::map<Word, FormalSum<BracketTree, F>> bcs_memo_, bcd_memo_;
};

// ---- coefficient-level residual checks ----
// Each returns s_P * table[P] - coupling * sum(vertex over sub-entries); zero
// iff the table satisfies the recursion at P.  The table is an opaque input,
// so a mutated entry is detected.

namespace detail {

template <class T>
const T& table_at(const std::map<Word, T>& tab, const Word& P) {
  auto it = tab.find(P);
  if (it == tab.end()) throw std::invalid_argument("table missing entry for " + P.str());
  return it->second;
}

}  // namespace detail

template <class F>
Vec3<F> mc_residual_cs(const KinConfig<F>& cfg, const std::map<Word, Vec3<F>>& tab,
                       const Word& P) {
  if (P.size() <= 1) return Vec3<F>{};
  Vec3<F> res = detail::table_at(tab, P).scaled(mandelstam(cfg, P));
  for (const auto& [Q, R] : deconcatenations(P))
    res -= detail::cs_vertex(detail::table_at(tab, Q), detail::table_at(tab, R),
                             cfg.momentum(Q), cfg.momentum(R))
               .scaled(cfg.lambda);
  return res;
}

template <class F>
ColourVec3<F> mc_residual_cd(const KinConfig<F>& cfg, const StructureConstants<F>& sc,
                             const std::map<Word, ColourVec3<F>>& tab, const Word& P) {
  ColourVec3<F> res(std::size_t(sc.dim()));
  if (P.size() <= 1) return res;
  const F s = mandelstam(cfg, P);
  const auto& uP = detail::table_at(tab, P);
  for (std::size_t a = 0; a < res.size(); ++a) res[a] = uP[a].scaled(s);
  const F half_lambda = cfg.lambda / field_traits<F>::from_int(2);
  for (const auto& [Q, R] : ordered_partitions(P)) {
    ColourVec3<F> v = detail::cd_vertex(sc, detail::table_at(tab, Q), detail::table_at(tab, R),
                                        cfg.momentum(Q), cfg.momentum(R));
    for (std::size_t a = 0; a < res.size(); ++a) res[a] -= v[a].scaled(half_lambda);
  }
  return res;
}

template <class F>
Mat3<F> mc_residual_dc(const KinConfig<F>& cfg, const std::map<Word, Mat3<F>>& tab,
                       const Word& P) {
  Mat3<F> res{};
  if (P.size() <= 1) return res;
  const F s = mandelstam(cfg, P);
  const auto& uP = detail::table_at(tab, P);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) res[r][c] = uP[r][c] * s;
  const F half_kappa = cfg.kappa / field_traits<F>::from_int(2);
  for (const auto& [Q, R] : ordered_partitions(P)) {
    Mat3<F> v = detail::dc_vertex(detail::table_at(tab, Q), detail::table_at(tab, R),
                                  cfg.momentum(Q), cfg.momentum(R));
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) res[r][c] -= half_kappa * v[r][c];
  }
  return res;
}

template <class F>
ColourMatrix<F> mc_residual_zc(const KinConfig<F>& cfg, const StructureConstants<F>& sc,
                               const StructureConstants<F>& sc_bar,
                               const std::map<Word, ColourMatrix<F>>& tab, const Word& P) {
  ColourMatrix<F> res = colour_matrix_zero<F>(sc.dim(), sc_bar.dim());
  if (P.size() <= 1) return res;
  const F s = mandelstam(cfg, P);
  const auto& uP = detail::table_at(tab, P);
  for (std::size_t a = 0; a < res.size(); ++a)
    for (std::size_t ab = 0; ab < res[a].size(); ++ab) res[a][ab] = uP[a][ab] * s;
  const F quarter_gamma = cfg.gamma / field_traits<F>::from_int(4);
  for (const auto& [Q, R] : ordered_partitions(P)) {
    ColourMatrix<F> v =
        detail::zc_vertex(sc, sc_bar, detail::table_at(tab, Q), detail::table_at(tab, R));
    for (std::size_t a = 0; a < res.size(); ++a)
      for (std::size_t ab = 0; ab < res[a].size(); ++ab) res[a][ab] -= quarter_gamma * v[a][ab];
  }
  return res;
}

template <class F>
F mc_residual_dbl(const KinConfig<F>& cfg, const std::map<std::pair<Word, Word>, F>& tab,
                  const Word& P, const Word& Q) {
  if (P.size() <= 1) return field_traits<F>::zero();
  auto at = [&](const Word& a, const Word& b) -> const F& {
    auto it = tab.find(std::make_pair(a, b));
    if (it == tab.end())
      throw std::invalid_argument("table missing entry for " + a.str() + "|" + b.str());
    return it->second;
  };
  F res = mandelstam(cfg, P) * at(P, Q);
  for (const auto& [R, S] : deconcatenations(P))
    for (const auto& [T, U] : deconcatenations(Q))
      res -= cfg.gamma * (at(R, T) * at(S, U) - at(S, T) * at(R, U));
  return res;
}

// ---- structural checks on current values ----

// u_P . k_P, exactly zero for cs currents.
template <class F>
F transversality_cs(CurrentEngine<F>& eng, const Word& P, bool barred = false) {
  return eng.cs(P, barred).dot(eng.config().momentum(P));
}

// Per-colour-component u^a_P . k_P for cd currents.
template <class F>
ColourVector<F> transversality_cd(CurrentEngine<F>& eng, const Word& P) {
  const Vec3<F> kP = eng.config().momentum(P);
  const ColourVec3<F>& u = eng.cd(P);
  ColourVector<F> out;
  out.reserve(u.size());
  for (const auto& v : u) out.push_back(v.dot(kP));
  return out;
}

// sum over P shuffle Q of u_w; must vanish.
template <class F>
Vec3<F> shuffle_check_cs(CurrentEngine<F>& eng, const Word& P, const Word& Q,
                         bool barred = false) {
  Vec3<F> acc;
  for (const auto& [w, mult] : shuffle(P, Q))
    acc += eng.cs(w, barred).scaled(field_traits<F>::from_int(mult));
  return acc;
}

// sum over P shuffle Q of u_{w|R} (left slot) or u_{R|w} (right slot).
template <class F>
F shuffle_check_dbl(CurrentEngine<F>& eng, const Word& P, const Word& Q, const Word& R,
                    bool left_slot = true) {
  F acc = field_traits<F>::zero();
  for (const auto& [w, mult] : shuffle(P, Q)) {
    const F& v = left_slot ? eng.dbl(w, R) : eng.dbl(R, w);
    acc += v * field_traits<F>::from_int(mult);
  }
  return acc;
}

}  // namespace bgdc
