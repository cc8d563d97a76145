#include "doctest.h"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "bgdc/colour.hpp"
#include "bgdc/currents.hpp"
#include "bgdc/random_config.hpp"

using namespace bgdc;
using S = ExactScalar;

namespace {

CurrentEngine<S> k3_engine() { return CurrentEngine<S>(fixture_k3(), builtin_su2()); }

// All ordered subsets (with >= 1 letter) of {1..m}: every subset in every
// internal order.
std::vector<Word> ordered_words(int m) {
  std::vector<Word> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<Letter> ls;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1u) ls.push_back(Letter(i + 1));
    std::sort(ls.begin(), ls.end());
    do {
      out.push_back(Word{std::vector<Letter>(ls)});
    } while (std::next_permutation(ls.begin(), ls.end()));
  }
  return out;
}

bool all_zero(const ColourVec3<S>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}
bool all_zero(const Mat3<S>& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!field_traits<S>::is_zero(x)) return false;
  return true;
}
bool all_zero(const ColourMatrix<S>& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!field_traits<S>::is_zero(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("single-letter currents are the seed data") {
  auto eng = k3_engine();
  const auto& cfg = eng.config();

  CHECK(eng.cs(Word{1}) == cfg.particle(1).eps);
  CHECK(eng.cs(Word{2}, /*barred=*/true) == cfg.particle(2).eps_bar);

  const auto& u1 = eng.cd(Word{1});  // colour label 1 -> slot 0
  CHECK(u1[0] == cfg.particle(1).eps);
  CHECK(u1[1].is_zero());
  CHECK(u1[2].is_zero());

  const auto& t1 = eng.dc(Word{1});  // eps_bar (x) eps = e_y (x) e_y
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(t1[r][c] == ((r == 1 && c == 1) ? S(1) : S(0)));

  const auto& z1 = eng.zc(Word{1});
  for (int a = 0; a < 3; ++a)
    for (int ab = 0; ab < 3; ++ab)
      CHECK(z1[std::size_t(a)][std::size_t(ab)] == ((a == 0 && ab == 0) ? S(1) : S(0)));

  CHECK(eng.dbl(Word{1}, Word{1}) == S(1));
  CHECK(eng.dbl(Word{1}, Word{2}) == S(0));
}

TEST_CASE("two-particle currents on the reference fixture") {
  auto eng = k3_engine();
  const Word w12{1, 2};

  CHECK(eng.cs(w12) == Vec3<S>(S(0), S(0), S(Rational(1, 2))));
  CHECK(eng.cs(w12, /*barred=*/true) == Vec3<S>(S(0), S(0), S(Rational(1, 2))));

  const auto& u = eng.cd(w12);
  CHECK(u[0].is_zero());
  CHECK(u[1].is_zero());
  CHECK(u[2] == Vec3<S>(S(0), S(0), S(Rational(0), Rational(-1))));

  const auto& t = eng.dc(w12);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(t[r][c] == ((r == 2 && c == 2) ? S(Rational(1, 4)) : S(0)));

  const auto& z = eng.zc(w12);
  for (int a = 0; a < 3; ++a)
    for (int ab = 0; ab < 3; ++ab)
      CHECK(z[std::size_t(a)][std::size_t(ab)] == ((a == 2 && ab == 2) ? S(-1) : S(0)));

  CHECK(eng.dbl(w12, w12) == S(Rational(1, 2)));
  CHECK(eng.dbl(w12, Word{2, 1}) == S(Rational(-1, 2)));
  CHECK(eng.dbl(w12, Word{1, 3}) == S(0));  // different letter sets
}

TEST_CASE("factorized representations match the direct recursion on the fixture") {
  auto eng = k3_engine();
  const Word w12{1, 2};
  CHECK(values_eq(eng.cs_factorized(w12), eng.cs(w12)));
  CHECK(values_eq(eng.cs_factorized(w12, true), eng.cs(w12, true)));
  CHECK(values_eq(eng.cd_factorized(w12), eng.cd(w12)));
  CHECK(values_eq(eng.dc_factorized(w12), eng.dc(w12)));
  CHECK(values_eq(eng.zc_factorized(w12), eng.zc(w12)));
  CHECK(eng.dbl_factorized(w12, w12) == eng.dbl(w12, w12));
  CHECK(eng.dbl_factorized(w12, Word{2, 1}) == eng.dbl(w12, Word{2, 1}));
}

TEST_CASE("berends-giele maps have the expected tree content") {
  KinConfig<S> cfg = random_kinematics(5, 101);
  CurrentEngine<S> eng(cfg, builtin_su2());

  // One split for a two-letter word, coefficient 1/s.
  const auto& m12 = eng.b_cs(Word{1, 2});
  REQUIRE(m12.terms().size() == 1);
  const auto& [t, c] = *m12.terms().begin();
  CHECK(t.str() == "[1,2]");
  CHECK(c == field_traits<S>::one() / mandelstam(cfg, Word{1, 2}));

  // Left/right deconcatenations give the two bracketings of 123.
  CHECK(eng.b_cs(Word{1, 2, 3}).terms().size() == 2);
  // The colour-dressed map runs over unordered set partitions: (2m-3)!!
  // trees for m letters.
  CHECK(eng.b_cd(Word{1, 2, 3}).terms().size() == 3);
  CHECK(eng.b_cd(Word{1, 2, 3, 4}).terms().size() == 15);
}

TEST_CASE("direct and factorized paths agree on random configurations") {
  for (std::uint64_t seed : {201u, 202u}) {
    KinConfig<S> cfg = random_kinematics(5, seed);
    CurrentEngine<S> eng(cfg, builtin_su2());
    for (const Word& P : ordered_words(4)) {
      CHECK(values_eq(eng.cs_factorized(P), eng.cs(P)));
      if (P.strictly_increasing()) {
        CHECK(values_eq(eng.cd_factorized(P), eng.cd(P)));
        CHECK(values_eq(eng.dc_factorized(P), eng.dc(P)));
        CHECK(values_eq(eng.zc_factorized(P), eng.zc(P)));
        CHECK(eng.dbl_factorized(P, P) == eng.dbl(P, P));
      }
    }
  }
}

TEST_CASE("double currents are symmetric in their two slots") {
  auto eng = k3_engine();
  CHECK(eng.dbl(Word{1, 2}, Word{2, 1}) == eng.dbl(Word{2, 1}, Word{1, 2}));

  KinConfig<S> cfg = random_kinematics(5, 55);
  CurrentEngine<S> r(cfg, builtin_su2());
  const Word P{1, 3, 2}, Q{2, 1, 3};
  CHECK(r.dbl(P, Q) == r.dbl(Q, P));
}

TEST_CASE("currents vanish summed over shuffles") {
  auto eng = k3_engine();
  CHECK(shuffle_check_cs(eng, Word{1}, Word{2}).is_zero());
  CHECK(field_traits<S>::is_zero(shuffle_check_dbl(eng, Word{1}, Word{2}, Word{1, 2}, true)));
  CHECK(field_traits<S>::is_zero(shuffle_check_dbl(eng, Word{1}, Word{2}, Word{2, 1}, false)));

  KinConfig<S> cfg = random_kinematics(6, 66);
  CurrentEngine<S> r(cfg, builtin_su2());
  CHECK(shuffle_check_cs(r, Word{1, 2}, Word{3}).is_zero());
  CHECK(shuffle_check_cs(r, Word{2}, Word{4, 1}, /*barred=*/true).is_zero());
  CHECK(field_traits<S>::is_zero(shuffle_check_dbl(r, Word{1, 2}, Word{3}, Word{1, 2, 3}, true)));
}

TEST_CASE("colour-stripped and colour-dressed currents are transverse") {
  auto eng = k3_engine();
  CHECK(field_traits<S>::is_zero(transversality_cs(eng, Word{1, 2})));
  CHECK(field_traits<S>::is_zero(transversality_cs(eng, Word{1, 2}, true)));
  for (const S& comp : transversality_cd(eng, Word{1, 2}))
    CHECK(field_traits<S>::is_zero(comp));

  KinConfig<S> cfg = random_kinematics(5, 77);
  CurrentEngine<S> r(cfg, builtin_su2());
  CHECK(field_traits<S>::is_zero(transversality_cs(r, Word{2, 1, 3})));
  for (const S& comp : transversality_cd(r, Word{1, 2, 4}))
    CHECK(field_traits<S>::is_zero(comp));
}

TEST_CASE("recursion residuals vanish on produced tables and catch mutations") {
  KinConfig<S> cfg = random_kinematics(4, 303);
  CurrentEngine<S> eng(cfg, builtin_su2());
  const Word w123{1, 2, 3};
  eng.cs(w123);
  eng.cs(Word{2, 1, 3});
  eng.cd(w123);
  eng.dc(w123);
  eng.zc(w123);
  eng.dbl(Word{1, 2}, Word{2, 1});

  SUBCASE("colour-stripped") {
    auto tab = eng.cs_entries();
    for (const auto& [P, v] : tab)
      CHECK(mc_residual_cs(cfg, tab, P).is_zero());
    auto broken = tab;
    broken[w123] = broken[w123].scaled(S(2));
    CHECK_FALSE(mc_residual_cs(cfg, broken, w123).is_zero());
  }
  SUBCASE("colour-dressed") {
    auto tab = eng.cd_entries();
    for (const auto& [P, v] : tab)
      CHECK(all_zero(mc_residual_cd(cfg, eng.algebra(), tab, P)));
    auto broken = tab;
    for (auto& comp : broken[w123]) comp = comp.scaled(S(2));
    CHECK_FALSE(all_zero(mc_residual_cd(cfg, eng.algebra(), broken, w123)));
  }
  SUBCASE("tensor") {
    auto tab = eng.dc_entries();
    for (const auto& [P, v] : tab)
      CHECK(all_zero(mc_residual_dc(cfg, tab, P)));
    auto broken = tab;
    for (auto& row : broken[w123])
      for (auto& x : row) x = x * S(2);
    CHECK_FALSE(all_zero(mc_residual_dc(cfg, broken, w123)));
  }
  SUBCASE("zeroth copy") {
    auto tab = eng.zc_entries();
    for (const auto& [P, v] : tab)
      CHECK(all_zero(mc_residual_zc(cfg, eng.algebra(), eng.algebra_bar(), tab, P)));
    auto broken = tab;
    for (auto& row : broken[w123])
      for (auto& x : row) x = x * S(2);
    CHECK_FALSE(all_zero(mc_residual_zc(cfg, eng.algebra(), eng.algebra_bar(), broken, w123)));
  }
  SUBCASE("double") {
    auto tab = eng.dbl_entries();
    for (const auto& [key, v] : tab)
      CHECK(field_traits<S>::is_zero(mc_residual_dbl(cfg, tab, key.first, key.second)));
    auto broken = tab;
    const auto key = std::make_pair(Word{1, 2}, Word{2, 1});
    broken[key] = broken[key] * S(2);
    CHECK_FALSE(field_traits<S>::is_zero(mc_residual_dbl(cfg, broken, key.first, key.second)));
  }
}

TEST_CASE("input validation") {
  auto eng = k3_engine();
  CHECK_THROWS_AS(eng.cd(Word{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(eng.dc(Word{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(eng.zc(Word{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(eng.dbl(Word{1, 1}, Word{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(eng.cs(Word{}), std::invalid_argument);
  CHECK_THROWS_AS(eng.dbl(Word{}, Word{1}), std::invalid_argument);
}

TEST_CASE("theory names round-trip") {
  for (Theory t : {Theory::cs, Theory::cd, Theory::dc, Theory::zc})
    CHECK(parse_theory(theory_name(t)) == t);
  CHECK_THROWS_AS(parse_theory("nope"), std::invalid_argument);
}
