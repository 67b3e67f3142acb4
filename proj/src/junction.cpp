#include "fusion_gerbe/junction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fusion_gerbe {

namespace {

constexpr double kPi = std::numbers::pi;

/// Clamp a computed sin^2/cos^2 value into [0,1], snapping onto the exact
/// endpoints so that face triples produce exactly diagonal / exactly
/// anti-diagonal frames (the zero-diagonal detector relies on this).
double clamp_square(double s, const char* what) {
  if (s < -kClampTol || s > 1.0 + kClampTol)
    throw std::runtime_error(std::string(what) +
                             ": squared sine/cosine outside [0,1] beyond tolerance");
  if (s < kSnapTol) return 0.0;
  if (s > 1.0 - kSnapTol) return 1.0;
  return s;
}

SU2Matrix exp_i_theta_sigma2(double theta) {
  return exp_algebra(AlgebraElement::from_coefficients(0.0, theta, 0.0));
}

SU2Matrix exp_i_phi_sigma3(double phi) {
  return exp_algebra(AlgebraElement::from_coefficients(0.0, 0.0, phi));
}

}  // namespace

JunctionFrame solve_junction(const WeightTriple& t) {
  if (!in_polytope(t)) throw std::domain_error("solve_junction: triple outside F");
  const double k = t.k.real();
  JunctionFrame f;

  // a: constant extension whenever lambda or mu sits at a vertex of the alcove
  if (t.lambda == 0.0 || t.lambda == k || t.mu == 0.0 || t.mu == k) {
    f.a = SU2Matrix::identity();
    f.theta = 0.0;
  } else {
    const double s2 = (std::cos(kPi * t.nu / k) - std::cos(kPi * (t.lambda + t.mu) / k)) /
                      (2.0 * std::sin(kPi * t.lambda / k) * std::sin(kPi * t.mu / k));
    f.theta = std::asin(std::sqrt(clamp_square(s2, "solve_a")));
    f.a = exp_i_theta_sigma2(f.theta);
  }

  // b: extension table covers lambda or nu at a vertex
  if (t.lambda == 0.0) {
    f.b = SU2Matrix::identity();
  } else if (t.lambda == k) {
    f.b = SU2Matrix::from_matrix(Complex(0.0, 1.0) * sigma2());
    f.theta_prime = kPi / 2.0;
  } else if (t.nu == 0.0 || t.nu == k) {
    f.b = SU2Matrix::identity();
  } else {
    const double c2 = (std::cos(kPi * t.mu / k) - std::cos(kPi * (t.lambda + t.nu) / k)) /
                      (2.0 * std::sin(kPi * t.lambda / k) * std::sin(kPi * t.nu / k));
    f.theta_prime = std::acos(std::sqrt(clamp_square(c2, "solve_b")));
    f.phi_prime = kPi * t.lambda / (2.0 * k);
    f.b = exp_i_phi_sigma3(f.phi_prime) * exp_i_theta_sigma2(f.theta_prime);
  }
  return f;
}

SU2Matrix solve_a(const WeightTriple& t) { return solve_junction(t).a; }

SU2Matrix solve_b(const WeightTriple& t) { return solve_junction(t).b; }

double junction_residual(const WeightTriple& t) {
  const JunctionFrame f = solve_junction(t);
  const Mat2 lhs = torus_element(t.lambda, t.k).matrix() *
                   adjoint(f.a, torus_element(t.mu, t.k).matrix());
  const Mat2 rhs = adjoint(f.b, torus_element(t.nu, t.k).matrix());
  return frobenius_distance(lhs, rhs);
}

std::pair<SU2Matrix, SU2Matrix> tau(const WeightTriple& t, const SU2Matrix& h) {
  const JunctionFrame f = solve_junction(t);
  const SU2Matrix g1 = SU2Matrix::from_matrix(
      adjoint(h, torus_element(t.lambda, t.k).matrix()));
  const SU2Matrix g2 = SU2Matrix::from_matrix(
      adjoint(h * f.a, torus_element(t.mu, t.k).matrix()));
  return {g1, g2};
}

Sign epsilon(const SU2Matrix& g) {
  return std::abs(g.matrix().a11) < kDiagTol ? Sign::Minus : Sign::Plus;
}

IsotropySubgroup isotropy_group(const WeightTriple& t) {
  const RegionClass r = classify_region(t);
  switch (r.stratum) {
    case Stratum::Corner: return IsotropySubgroup::FullSU2;
    case Stratum::BoundaryNonCorner: return IsotropySubgroup::CircleU1;
    case Stratum::Interior: return IsotropySubgroup::CenterZ2;
    case Stratum::Outside: break;
  }
  throw std::domain_error("isotropy_group: triple outside F");
}

IsotropySubgroup isotropy_group(const IntWeightTriple& t) {
  return isotropy_group(t.to_real());
}

std::int64_t winding_integer(const IntWeightTriple& t) {
  const RegionClass r = classify_region(t);
  if (r.stratum != Stratum::Corner && r.stratum != Stratum::BoundaryNonCorner)
    throw std::domain_error("winding_integer: triple not on the boundary of F");
  const JunctionFrame f = solve_junction(t.to_real());
  const double ea = sign_value(epsilon(f.a));
  const double eb = sign_value(epsilon(f.b));
  const double q = (static_cast<double>(t.lambda) + ea * static_cast<double>(t.mu) -
                    eb * static_cast<double>(t.nu)) /
                   (2.0 * t.k.real());
  const double rounded = std::round(q);
  if (std::abs(q - rounded) > kRegionTol)
    throw std::runtime_error("winding_integer: quotient is not an integer");
  return static_cast<std::int64_t>(rounded);
}

std::optional<FaceSigns> boundary_face_signs(const IntWeightTriple& t) {
  const std::int64_t k = t.k.value();
  // vertex cases first: triples meeting several faces take the signs of
  // the extension-table frames, matching the numeric detector exactly
  if (t.lambda == 0) return FaceSigns{+1, +1, 0};  // (0, mu, mu): a = b = e
  if (t.lambda == k) return FaceSigns{+1, -1, 1};  // (k, mu, k-mu): a = e, b = i sigma2
  if (t.mu == 0) return FaceSigns{+1, +1, 0};      // (lambda, 0, lambda)
  if (t.mu == k) return FaceSigns{+1, -1, 1};      // (lambda, k, k-lambda)
  if (t.nu == 0) return FaceSigns{-1, +1, 0};      // (mu, mu, 0): a = i sigma2, b = e
  if (t.nu == k) return FaceSigns{+1, +1, 0};      // (mu, k-mu, k)
  if (t.nu == t.lambda + t.mu) return FaceSigns{+1, +1, 0};
  if (t.nu == t.lambda - t.mu) return FaceSigns{-1, +1, 0};
  if (t.nu == t.mu - t.lambda) return FaceSigns{-1, -1, 0};
  if (t.nu == 2 * k - t.lambda - t.mu) return FaceSigns{+1, -1, 1};
  return std::nullopt;
}

}  // namespace fusion_gerbe
