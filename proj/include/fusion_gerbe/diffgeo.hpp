#ifndef FUSION_GERBE_DIFFGEO_HPP
#define FUSION_GERBE_DIFFGEO_HPP

#include <array>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fusion_gerbe/alcove.hpp"
#include "fusion_gerbe/su2.hpp"

namespace fusion_gerbe {

// Tangent directions are encoded in the right-invariant frame: the
// direction X at g is the curve eps -> exp(eps X) g, so theta_R(V) = X and
// theta_L(V)(g) = Ad_{g^-1}(X). On product points a direction is one such
// element per factor; on [0,k] x SU(2) it carries a dlambda component.

struct GroupSpace {
  using Point = SU2Matrix;
  using Direction = AlgebraElement;
  static Point flow(const Point& g, const Direction& x, double t) {
    return exp_algebra(t * x) * g;
  }
  static Direction frame_bracket(const Direction& x, const Direction& y);
};

struct ProductSpace {
  using Point = std::pair<SU2Matrix, SU2Matrix>;
  using Direction = std::pair<AlgebraElement, AlgebraElement>;
  static Point flow(const Point& p, const Direction& v, double t) {
    return {exp_algebra(t * v.first) * p.first, exp_algebra(t * v.second) * p.second};
  }
  static Direction frame_bracket(const Direction& v, const Direction& w) {
    return {GroupSpace::frame_bracket(v.first, w.first),
            GroupSpace::frame_bracket(v.second, w.second)};
  }
};

struct WeightGroupSpace {
  using Point = std::pair<double, SU2Matrix>;
  using Direction = std::pair<double, AlgebraElement>;
  static Point flow(const Point& p, const Direction& v, double t) {
    return {p.first + t * v.first, exp_algebra(t * v.second) * p.second};
  }
  static Direction frame_bracket(const Direction& v, const Direction& w) {
    return {0.0, GroupSpace::frame_bracket(v.second, w.second)};
  }
};

/// A p-form as a callable on (base point, p directions). Values are
/// complex; the concrete curvings below are real-valued.
template <class Space>
struct Form {
  int degree;
  std::function<Complex(const typename Space::Point&,
                        std::span<const typename Space::Direction>)>
      eval;
};

/// Exterior derivative in the invariant frame: Cartan formula with
/// central-difference directional derivatives along eps -> flow(x, V, eps).
template <class Space>
Complex numeric_d(const Form<Space>& form, const typename Space::Point& x,
                  std::span<const typename Space::Direction> dirs, double step) {
  const int p = form.degree;
  if (static_cast<int>(dirs.size()) != p + 1)
    throw std::invalid_argument("numeric_d: need degree + 1 directions");
  if (!(step > 0.0)) throw std::invalid_argument("numeric_d: step must be positive");

  Complex total{0.0, 0.0};
  std::vector<typename Space::Direction> rest;
  rest.reserve(static_cast<std::size_t>(p) + 1);
  for (int i = 0; i <= p; ++i) {
    rest.clear();
    for (int t = 0; t <= p; ++t)
      if (t != i) rest.push_back(dirs[static_cast<std::size_t>(t)]);
    const Complex fp = form.eval(Space::flow(x, dirs[static_cast<std::size_t>(i)], step), rest);
    const Complex fm = form.eval(Space::flow(x, dirs[static_cast<std::size_t>(i)], -step), rest);
    total += (i % 2 == 0 ? 1.0 : -1.0) * (fp - fm) / (2.0 * step);
  }
  for (int i = 0; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j) {
      rest.clear();
      rest.push_back(Space::frame_bracket(dirs[static_cast<std::size_t>(i)],
                                          dirs[static_cast<std::size_t>(j)]));
      for (int t = 0; t <= p; ++t)
        if (t != i && t != j) rest.push_back(dirs[static_cast<std::size_t>(t)]);
      total += ((i + j) % 2 == 0 ? 1.0 : -1.0) * form.eval(x, rest);
    }
  return total;
}

/// Cartan 3-form H = (k/12pi) tr(theta_L ^ theta_L ^ theta_L): full
/// antisymmetrisation over S3, no 1/p! factor.
double eval_H(const SU2Matrix& g, const AlgebraElement& x1, const AlgebraElement& x2,
              const AlgebraElement& x3, Level k);

/// Q~(lambda, h) = (k/4pi) tr(theta_L(h) ^ Ad_{t_lambda} theta_L(h)).
double eval_Q(double lambda, const SU2Matrix& h, const AlgebraElement& x1,
              const AlgebraElement& x2, Level k);

/// F~(c, h) = -i c tr(Lambda dtheta_L(h)); with dtheta_L = -theta_L ^ theta_L
/// this evaluates to i c tr(Lambda [A1, A2]).
double eval_F(double coeff, const SU2Matrix& h, const AlgebraElement& x1,
              const AlgebraElement& x2);

/// rho = (k/4pi) tr(p1* theta_L ^ p2* theta_R) on SU(2) x SU(2).
double eval_rho(const SU2Matrix& g1, const SU2Matrix& g2,
                const ProductSpace::Direction& v1, const ProductSpace::Direction& v2,
                Level k);

Form<GroupSpace> H_form(Level k);
Form<GroupSpace> Q_form(double lambda, Level k);
Form<GroupSpace> F_form(double coeff);
Form<ProductSpace> rho_form(Level k);

/// Curving on [0,k] x SU(2): B~_c(lambda, h) = Q~(lambda, h) + F~(lambda - c, h).
/// No dlambda legs; the lambda-dependence enters through numeric_d.
Form<WeightGroupSpace> curving_form(double lambda_c, Level k);

/// Pushforward of (s, X) through c(lambda, h) = Ad_h(t_lambda) by central
/// differences, expressed in the right-invariant frame at the image point.
AlgebraElement conjugation_pushforward(double lambda, const SU2Matrix& h, double s,
                                       const AlgebraElement& x, Level k, double step);

/// |p1*H + p2*H - m*H - d rho| on three product directions; the H pullbacks
/// use the exact pushforwards (m sends (X, Y) at (g1,g2) to X + Ad_{g1} Y),
/// d rho uses numeric_d at the given step.
double pw_residual(const SU2Matrix& g1, const SU2Matrix& g2,
                   const std::array<ProductSpace::Direction, 3>& dirs, Level k,
                   double step);

/// Omega~(V_A, V_B) from the four closed-form contractions of the defect
/// 2-form; identically zero. Axes a_axis, b_axis in {1,2,3}. Requires t in
/// F-dot (the smoothness domain of a and b).
double omega_contract(const WeightTriple& t, const SU2Matrix& h, int a_axis, int b_axis);

/// Independent route: pull the three Q~ back through q1, q2, qm and rho
/// through tau, with analytic pushforwards, and re-sum.
double omega_contract_pullback(const WeightTriple& t, const SU2Matrix& h, int a_axis,
                               int b_axis);

/// Connection 1-form A~ of the stable-isomorphism bundle, evaluated on the
/// right-invariant direction X at h.
double eval_A_connection(const IntWeightTriple& t, const ChartTriple& charts,
                         const SU2Matrix& h, const AlgebraElement& x);

Form<GroupSpace> A_connection_form(const IntWeightTriple& t, const ChartTriple& charts);

/// Integral of -F~(lambda - lambda_l) over C_{lambda;l} through the chart
/// (phi, theta) -> h(phi,theta) t_lambda h(phi,theta)^{-1},
/// h = e^{i phi sigma3} e^{i theta sigma2}, (phi, theta) in [0,pi) x [0,pi/2].
/// Midpoint rule on a uniform grid in (phi, v) with v = (1 - cos 2theta)/2,
/// the equal-area reparameterisation of the theta leg; the integrand is
/// pulled back through the generic evaluator with finite-difference chart
/// pushforwards. Grid must be at least (64, 32). Expected value 2pi (lambda_l - lambda).
double period_integral(double lambda, int l, Level k, int n_phi, int n_theta);

}  // namespace fusion_gerbe

#endif
