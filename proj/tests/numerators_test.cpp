#include "doctest.h"

#include "bgdc/numerators.hpp"
#include "bgdc/random_config.hpp"
#include "bgdc/rng.hpp"

using namespace bgdc;
using S = ExactScalar;

namespace {

KinElement<S> elem(long long cx, long long cy, long long cz, long long kx, long long ky,
                   long long kz) {
  return {Vec3<S>(S(cx), S(cy), S(cz)), Vec3<S>(S(kx), S(ky), S(kz))};
}

}  // namespace

TEST_CASE("bracket of the first two fixture particles") {
  KinConfig<S> cfg = fixture_k3();
  KinElement<S> x{cfg.particle(1).eps, cfg.particle(1).k};
  KinElement<S> y{cfg.particle(2).eps, cfg.particle(2).k};

  KinElement<S> b = kin_bracket(x, y);
  CHECK(b.cov == Vec3<S>(S(0), S(0), S(1)));
  CHECK(b.mom == Vec3<S>(S(2), S(1), S(0)));

  // Antisymmetry.
  KinElement<S> r = kin_bracket(y, x);
  CHECK(r.cov == Vec3<S>(S(0), S(0), S(-1)));
  KinElement<S> self = kin_bracket(x, x);
  CHECK(self.cov.is_zero());
}

TEST_CASE("the bracket satisfies the Jacobi identity on random elements") {
  DetRng rng(5);
  auto draw = [&]() {
    return elem(rng.bounded(-3, 3), rng.bounded(-3, 3), rng.bounded(-3, 3), rng.bounded(-3, 3),
                rng.bounded(-3, 3), rng.bounded(-3, 3));
  };
  for (int trial = 0; trial < 20; ++trial) {
    KinElement<S> x = draw(), y = draw(), z = draw();
    Vec3<S> acc = kin_bracket(x, kin_bracket(y, z)).cov;
    acc += kin_bracket(y, kin_bracket(z, x)).cov;
    acc += kin_bracket(z, kin_bracket(x, y)).cov;
    CHECK(acc.is_zero());
  }
}

TEST_CASE("numerators carry the total momentum of their letters") {
  KinConfig<S> cfg = random_kinematics(5, 21);
  for (const Word& P : {Word{1, 2}, Word{3, 1, 4}, Word{2, 3, 4, 1}}) {
    KinElement<S> n = numerator(cfg, left_bracketing(P));
    CHECK(n.mom == cfg.momentum(P));
  }
  KinConfig<S> k3 = fixture_k3();
  CHECK(numerator(k3, left_bracketing(Word{1, 2})).cov == Vec3<S>(S(0), S(0), S(1)));
  // Barred numerators read the barred polarizations (equal on this fixture).
  CHECK(numerator(k3, left_bracketing(Word{1, 2}), true).cov == Vec3<S>(S(0), S(0), S(1)));
}

TEST_CASE("generalized Jacobi holds for kinematic numerators") {
  for (std::uint64_t seed : {31u, 32u}) {
    KinConfig<S> cfg = random_kinematics(5, seed);
    for (int k = 2; k <= 4; ++k) {
      CHECK(check_gen_jacobi(cfg, k).pass);
      CHECK(check_gen_jacobi(cfg, k, /*barred=*/true).pass);
    }
  }
}

TEST_CASE("a broken bracket is detected") {
  KinConfig<S> cfg = random_kinematics(4, 77);
  // Drop the second term of the bracket: antisymmetry dies at order 2.
  auto broken = [](const KinElement<S>& x, const KinElement<S>& y) {
    KinElement<S> out;
    out.cov = y.cov.scaled(x.cov.dot(y.mom));
    out.mom = x.mom + y.mom;
    return out;
  };
  ValidationReport rep = check_gen_jacobi_with(cfg, 2, broken);
  CHECK_FALSE(rep.pass);
}
