#include "fusion_gerbe/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fusion_gerbe {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Complex trace(const Mat2& a) { return a.a11 + a.a22; }

Complex det(const Mat2& a) { return a.a11 * a.a22 - a.a12 * a.a21; }

Mat2 dagger(const Mat2& a) {
  return {std::conj(a.a11), std::conj(a.a21), std::conj(a.a12), std::conj(a.a22)};
}

double frobenius_norm(const Mat2& a) {
  return std::sqrt(std::norm(a.a11) + std::norm(a.a12) + std::norm(a.a21) +
                   std::norm(a.a22));
}

double frobenius_distance(const Mat2& a, const Mat2& b) {
  return frobenius_norm(a - b);
}

Mat2 identity_mat() { return {1.0, 0.0, 0.0, 1.0}; }
Mat2 sigma1() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2 sigma2() { return {0.0, -kI, kI, 0.0}; }
Mat2 sigma3() { return {1.0, 0.0, 0.0, -1.0}; }

Mat2 sigma(int axis) {
  switch (axis) {
    case 1: return sigma1();
    case 2: return sigma2();
    case 3: return sigma3();
    default: throw std::domain_error("sigma: axis must be 1, 2 or 3");
  }
}

Mat2 fundamental_weight() { return 0.5 * sigma3(); }

Level::Level(int k) : k_(k) {
  if (k < 1) throw std::domain_error("Level: k must be a positive integer");
}

SU2Matrix SU2Matrix::from_matrix(const Mat2& m) {
  const double unitary_defect = frobenius_distance(dagger(m) * m, identity_mat());
  if (unitary_defect > kAlgebraTol)
    throw std::domain_error("SU2Matrix: matrix is not unitary (defect " +
                            std::to_string(unitary_defect) + ")");
  if (std::abs(det(m) - Complex(1.0)) > kAlgebraTol)
    throw std::domain_error("SU2Matrix: determinant is not 1");
  return SU2Matrix(m, Unchecked{});
}

AlgebraElement AlgebraElement::from_matrix(const Mat2& m) {
  if (frobenius_norm(dagger(m) + m) > kAlgebraTol)
    throw std::domain_error("AlgebraElement: matrix is not anti-hermitian");
  if (std::abs(trace(m)) > kAlgebraTol)
    throw std::domain_error("AlgebraElement: matrix is not traceless");
  return AlgebraElement(m);
}

AlgebraElement AlgebraElement::from_coefficients(double c1, double c2, double c3) {
  // i (c1 s1 + c2 s2 + c3 s3), written out to keep entries exact
  return AlgebraElement(Mat2{Complex(0.0, c3), Complex(c2, c1),
                             Complex(-c2, c1), Complex(0.0, -c3)});
}

AlgebraElement AlgebraElement::project(const Mat2& m) {
  Mat2 anti = 0.5 * (m - dagger(m));
  const Complex half_tr = 0.5 * trace(anti);
  anti.a11 -= half_tr;
  anti.a22 -= half_tr;
  return AlgebraElement(anti);
}

std::array<double, 3> AlgebraElement::coefficients() const {
  // c_A = Im tr(X sigma_A) / 2
  return {0.5 * trace(m_ * sigma1()).imag(), 0.5 * trace(m_ * sigma2()).imag(),
          0.5 * trace(m_ * sigma3()).imag()};
}

double AlgebraElement::frame_norm() const {
  const auto c = coefficients();
  return std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
}

SU2Matrix exp_algebra(const AlgebraElement& x) {
  const double n = x.frame_norm();
  Mat2 g;
  if (n < 1e-150) {
    g = identity_mat() + x.matrix();
  } else {
    g = std::cos(n) * identity_mat() + (std::sin(n) / n) * x.matrix();
  }
  return SU2Matrix(g, SU2Matrix::Unchecked{});
}

SU2Matrix torus_element(double lambda, Level k) {
  if (!(lambda >= 0.0 && lambda <= k.real()))
    throw std::domain_error("torus_element: weight outside [0, k]");
  const double phase = std::numbers::pi * lambda / k.real();
  const Mat2 t{std::polar(1.0, phase), 0.0, 0.0, std::polar(1.0, -phase)};
  return SU2Matrix::from_matrix(t);
}

SU2Matrix euler(double phi, double theta, double psi) {
  const Mat2 left{std::polar(1.0, phi), 0.0, 0.0, std::polar(1.0, -phi)};
  const Mat2 mid{std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta)};
  const Mat2 right{std::polar(1.0, psi), 0.0, 0.0, std::polar(1.0, -psi)};
  return SU2Matrix::from_matrix(left * mid * right);
}

Mat2 adjoint(const SU2Matrix& g, const Mat2& X) {
  return g.matrix() * X * g.inverse().matrix();
}

AlgebraElement algebra_adjoint(const SU2Matrix& g, const AlgebraElement& x) {
  return AlgebraElement::project(adjoint(g, x.matrix()));
}

double class_angle(const SU2Matrix& g, Level k) {
  const double c = std::clamp(0.5 * trace(g.matrix()).real(), -1.0, 1.0);
  return k.real() / std::numbers::pi * std::acos(c);
}

}  // namespace fusion_gerbe
