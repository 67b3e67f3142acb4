#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fusion_gerbe/sampling.hpp"
#include "fusion_gerbe/su2.hpp"

using namespace fusion_gerbe;

namespace {
constexpr double kPi = std::numbers::pi;

Mat2 i_sigma(int axis) { return Complex(0.0, 1.0) * sigma(axis); }
}  // namespace

TEST_CASE("pauli algebra holds exactly") {
  // sigma_A sigma_B = delta_AB 1 + i eps_ABC sigma_C, entrywise exact
  const auto exact_eq = [](const Mat2& a, const Mat2& b) {
    return a.a11 == b.a11 && a.a12 == b.a12 && a.a21 == b.a21 && a.a22 == b.a22;
  };
  CHECK(exact_eq(sigma1() * sigma1(), identity_mat()));
  CHECK(exact_eq(sigma2() * sigma2(), identity_mat()));
  CHECK(exact_eq(sigma3() * sigma3(), identity_mat()));
  CHECK(exact_eq(sigma1() * sigma2(), Complex(0.0, 1.0) * sigma3()));
  CHECK(exact_eq(sigma2() * sigma3(), Complex(0.0, 1.0) * sigma1()));
  CHECK(exact_eq(sigma3() * sigma1(), Complex(0.0, 1.0) * sigma2()));
  CHECK(exact_eq(sigma2() * sigma1(), Complex(0.0, -1.0) * sigma3()));
}

TEST_CASE("frobenius distance") {
  CHECK(frobenius_distance(sigma1(), sigma1()) == 0.0);
  CHECK(frobenius_distance(identity_mat(), -identity_mat()) ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
  // tr((s1-s2)^dag (s1-s2)) = 4, so the distance is 2
  CHECK(frobenius_distance(sigma1(), sigma2()) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("torus elements") {
  const Level k(4);
  CHECK(frobenius_distance(torus_element(0.0, k).matrix(), identity_mat()) < kAlgebraTol);
  CHECK(frobenius_distance(torus_element(4.0, k).matrix(), -identity_mat()) < kAlgebraTol);
  const Mat2 expect{Complex(0.0, 1.0), 0.0, 0.0, Complex(0.0, -1.0)};
  CHECK(frobenius_distance(torus_element(1.0, Level(2)).matrix(), expect) < kAlgebraTol);
  CHECK_THROWS_AS(torus_element(-0.5, k), std::domain_error);
  CHECK_THROWS_AS(torus_element(4.5, k), std::domain_error);
}

TEST_CASE("euler parameterisation") {
  CHECK(frobenius_distance(euler(0, 0, 0).matrix(), identity_mat()) < kAlgebraTol);
  CHECK(frobenius_distance(euler(0, kPi / 2, 0).matrix(), i_sigma(2)) < kAlgebraTol);
  // commuting sigma3 factors
  const double phi = 0.37, psi = 1.21;
  const Mat2 expect{std::polar(1.0, phi + psi), 0.0, 0.0, std::polar(1.0, -(phi + psi))};
  CHECK(frobenius_distance(euler(phi, 0, psi).matrix(), expect) < kAlgebraTol);

  Rng rng(20210);
  std::uniform_real_distribution<double> uni(-10.0, 10.0);
  for (int i = 0; i < 10000; ++i) {
    const SU2Matrix g = euler(uni(rng), uni(rng), uni(rng));
    CHECK(frobenius_distance(dagger(g.matrix()) * g.matrix(), identity_mat()) <
          kAlgebraTol);
    CHECK(std::abs(det(g.matrix()) - Complex(1.0)) < kAlgebraTol);
  }
}

TEST_CASE("adjoint action") {
  const SU2Matrix e = SU2Matrix::identity();
  CHECK(frobenius_distance(adjoint(e, sigma3()), sigma3()) == 0.0);
  const SU2Matrix is2 = SU2Matrix::from_matrix(i_sigma(2));
  CHECK(frobenius_distance(adjoint(is2, sigma3()), -sigma3()) < kAlgebraTol);
  const SU2Matrix diag = euler(0.77, 0.0, 0.0);
  CHECK(frobenius_distance(adjoint(diag, sigma3()), sigma3()) < kAlgebraTol);

  // group action: Ad_{gh} = Ad_g Ad_h; traces are preserved
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const SU2Matrix g = haar_su2(rng), h = haar_su2(rng);
    const Mat2 x = random_algebra(rng).matrix();
    CHECK(frobenius_distance(adjoint(g * h, x), adjoint(g, adjoint(h, x))) < kAlgebraTol);
    CHECK(std::abs(trace(adjoint(g, x)) - trace(x)) < kAlgebraTol);
  }
}

TEST_CASE("class angle") {
  const Level k(4);
  CHECK(class_angle(SU2Matrix::identity(), k) == 0.0);
  CHECK(class_angle(-SU2Matrix::identity(), k) == doctest::Approx(4.0).epsilon(1e-15));

  Rng rng(77);
  std::uniform_real_distribution<double> uni(0.0, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const double lambda = uni(rng);
    CHECK(std::abs(class_angle(torus_element(lambda, k), k) - lambda) < kAlgebraTol);
    const SU2Matrix h = haar_su2(rng);
    const SU2Matrix g =
        SU2Matrix::from_matrix(adjoint(h, torus_element(lambda, k).matrix()));
    CHECK(std::abs(class_angle(g, k) - lambda) < kRoundTripTol);
  }
}

TEST_CASE("algebra elements") {
  const AlgebraElement x = AlgebraElement::from_coefficients(0.3, -1.2, 0.5);
  CHECK(frobenius_norm(dagger(x.matrix()) + x.matrix()) == 0.0);
  CHECK(std::abs(trace(x.matrix())) == 0.0);
  const auto c = x.coefficients();
  CHECK(c[0] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(c[1] == doctest::Approx(-1.2).epsilon(1e-15));
  CHECK(c[2] == doctest::Approx(0.5).epsilon(1e-15));

  // exp of i theta sigma2 against the euler closed form
  const double theta = 0.813;
  const SU2Matrix via_exp = exp_algebra(AlgebraElement::from_coefficients(0, theta, 0));
  CHECK(frobenius_distance(via_exp.matrix(), euler(0, theta, 0).matrix()) < kAlgebraTol);

  CHECK_THROWS_AS(AlgebraElement::from_matrix(sigma1()), std::domain_error);
  CHECK_THROWS_AS(SU2Matrix::from_matrix(2.0 * identity_mat()), std::domain_error);
}

TEST_CASE("level validation") {
  CHECK_THROWS_AS(Level(0), std::domain_error);
  CHECK_THROWS_AS(Level(-3), std::domain_error);
  CHECK(Level(1).value() == 1);
}
