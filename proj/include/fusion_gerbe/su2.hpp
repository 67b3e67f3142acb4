#ifndef FUSION_GERBE_SU2_HPP
#define FUSION_GERBE_SU2_HPP

#include <array>
#include <complex>

namespace fusion_gerbe {

using Complex = std::complex<double>;

// Tolerances used across the library.
//   kAlgebraTol   — algebraic identities on exactly-constructed matrices
//   kRoundTripTol — identities routed through transcendental functions
//   kRegionTol    — face/corner membership of real-valued weight triples
//   kClampTol     — admissible overshoot of sin^2/cos^2 outside [0,1]
//   kSnapTol      — snap window pulling sin^2/cos^2 onto exact 0/1
//   kDiagTol      — |g11| threshold of the zero-diagonal detector
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kRoundTripTol = 1e-10;
inline constexpr double kRegionTol = 1e-9;
inline constexpr double kClampTol = 1e-9;
inline constexpr double kSnapTol = 1e-12;
inline constexpr double kDiagTol = 1e-9;

/// 2x2 complex matrix, row-major. The only linear algebra this project needs.
struct Mat2 {
  Complex a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};

  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
  }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
  }
  friend Mat2 operator*(Complex s, const Mat2& a) {
    return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
  }
  friend Mat2 operator*(double s, const Mat2& a) { return Complex(s) * a; }
  friend Mat2 operator-(const Mat2& a) { return {-a.a11, -a.a12, -a.a21, -a.a22}; }
};

Complex trace(const Mat2& a);
Complex det(const Mat2& a);
Mat2 dagger(const Mat2& a);
double frobenius_norm(const Mat2& a);
double frobenius_distance(const Mat2& a, const Mat2& b);

Mat2 identity_mat();
Mat2 sigma1();
Mat2 sigma2();
Mat2 sigma3();
Mat2 sigma(int axis);  // axis in {1,2,3}

/// The fundamental weight Lambda = sigma3 / 2 under the trace form.
Mat2 fundamental_weight();

/// Positive integer level of the affine algebra.
class Level {
 public:
  explicit Level(int k);
  int value() const { return k_; }
  double real() const { return static_cast<double>(k_); }
  friend bool operator==(Level a, Level b) { return a.k_ == b.k_; }
  friend auto operator<=>(Level a, Level b) { return a.k_ <=> b.k_; }

 private:
  int k_;
};

/// Group element of SU(2). Construction checks unitarity and det = 1
/// within kAlgebraTol; group operations stay inside the group.
class SU2Matrix {
 public:
  SU2Matrix() : m_(identity_mat()) {}
  static SU2Matrix from_matrix(const Mat2& m);
  static SU2Matrix identity() { return SU2Matrix(); }

  const Mat2& matrix() const { return m_; }
  SU2Matrix inverse() const { return SU2Matrix(dagger(m_), Unchecked{}); }

  friend SU2Matrix operator*(const SU2Matrix& a, const SU2Matrix& b) {
    return SU2Matrix(a.m_ * b.m_, Unchecked{});
  }
  friend SU2Matrix operator-(const SU2Matrix& a) {
    return SU2Matrix(-a.m_, Unchecked{});
  }

 private:
  struct Unchecked {};
  SU2Matrix(const Mat2& m, Unchecked) : m_(m) {}
  Mat2 m_;

  friend class AlgebraElement;
  friend SU2Matrix exp_algebra(const class AlgebraElement& x);
};

/// Element of su(2): anti-hermitian traceless 2x2 matrix,
/// X = sum_A c_A i sigma_A with real frame coefficients c_A.
class AlgebraElement {
 public:
  AlgebraElement() : m_{} {}
  static AlgebraElement from_matrix(const Mat2& m);   // checks X^dag = -X, tr X = 0
  static AlgebraElement from_coefficients(double c1, double c2, double c3);
  static AlgebraElement project(const Mat2& m);       // nearest algebra element

  const Mat2& matrix() const { return m_; }
  std::array<double, 3> coefficients() const;
  double frame_norm() const;  // |c|

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    return AlgebraElement(a.m_ + b.m_);
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    return AlgebraElement(a.m_ - b.m_);
  }
  friend AlgebraElement operator*(double s, const AlgebraElement& a) {
    return AlgebraElement(s * a.m_);
  }
  friend AlgebraElement operator-(const AlgebraElement& a) {
    return AlgebraElement(-a.m_);
  }

 private:
  explicit AlgebraElement(const Mat2& m) : m_(m) {}
  Mat2 m_;
};

/// exp(X) for X in su(2), via X^2 = -|c|^2 I.
SU2Matrix exp_algebra(const AlgebraElement& x);

/// t_lambda = diag(e^{i pi lambda/k}, e^{-i pi lambda/k}). Requires 0 <= lambda <= k.
SU2Matrix torus_element(double lambda, Level k);

/// Euler parameterisation e^{i phi sigma3} e^{i theta sigma2} e^{i psi sigma3}.
/// Canonical ranges phi in [0,pi), theta in [0,pi/2], psi in [0,2pi);
/// angles outside these ranges are accepted.
SU2Matrix euler(double phi, double theta, double psi);

/// Ad_g(X) = g X g^{-1}.
Mat2 adjoint(const SU2Matrix& g, const Mat2& X);

/// Adjoint action restricted to the algebra (projects away roundoff).
AlgebraElement algebra_adjoint(const SU2Matrix& g, const AlgebraElement& x);

/// Conjugacy-class label lambda in [0, k] of g: (k/pi) arccos(Re tr g / 2),
/// argument clamped to [-1, 1].
double class_angle(const SU2Matrix& g, Level k);

}  // namespace fusion_gerbe

#endif
