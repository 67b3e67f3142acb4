#include "fusion_gerbe/diffgeo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fusion_gerbe/junction.hpp"

namespace fusion_gerbe {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// Step of the finite-difference chart pushforwards in period_integral;
// central differences, so the error is quadratic in it.
constexpr double kChartStep = 1e-6;

Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

Mat2 left_mc(const SU2Matrix& g, const AlgebraElement& x) {
  // theta_L evaluated on the right-invariant direction X at g
  return adjoint(g.inverse(), x.matrix());
}

}  // namespace

// Right-invariant frame fields R_X satisfy [R_X, R_Y] = R_{-[X,Y]}; the
// sign is pinned against the Maurer-Cartan equation in the test suite.
AlgebraElement GroupSpace::frame_bracket(const Direction& x, const Direction& y) {
  return AlgebraElement::project(-1.0 * commutator(x.matrix(), y.matrix()));
}

double eval_H(const SU2Matrix& g, const AlgebraElement& x1, const AlgebraElement& x2,
              const AlgebraElement& x3, Level k) {
  const Mat2 a1 = left_mc(g, x1);
  const Mat2 a2 = left_mc(g, x2);
  const Mat2 a3 = left_mc(g, x3);
  // full antisymmetrisation collapses to 3 (tr(a1 a2 a3) - tr(a1 a3 a2))
  const Complex sum = 3.0 * (trace(a1 * (a2 * a3)) - trace(a1 * (a3 * a2)));
  return (k.real() / (12.0 * kPi)) * sum.real();
}

double eval_Q(double lambda, const SU2Matrix& h, const AlgebraElement& x1,
              const AlgebraElement& x2, Level k) {
  const SU2Matrix t = torus_element(lambda, k);
  const Mat2 a1 = left_mc(h, x1);
  const Mat2 a2 = left_mc(h, x2);
  const Complex val = trace(a1 * adjoint(t, a2)) - trace(a2 * adjoint(t, a1));
  return (k.real() / (4.0 * kPi)) * val.real();
}

double eval_F(double coeff, const SU2Matrix& h, const AlgebraElement& x1,
              const AlgebraElement& x2) {
  const Mat2 a1 = left_mc(h, x1);
  const Mat2 a2 = left_mc(h, x2);
  const Complex val = kI * coeff * trace(fundamental_weight() * commutator(a1, a2));
  return val.real();
}

double eval_rho(const SU2Matrix& g1, const SU2Matrix& /*g2*/,
                const ProductSpace::Direction& v1, const ProductSpace::Direction& v2,
                Level k) {
  // theta_R on the right-invariant direction is the direction itself
  const Mat2 a1 = left_mc(g1, v1.first);
  const Mat2 a2 = left_mc(g1, v2.first);
  const Complex val = trace(a1 * v2.second.matrix()) - trace(a2 * v1.second.matrix());
  return (k.real() / (4.0 * kPi)) * val.real();
}

Form<GroupSpace> H_form(Level k) {
  return {3, [k](const SU2Matrix& g, std::span<const AlgebraElement> d) {
            return Complex(eval_H(g, d[0], d[1], d[2], k), 0.0);
          }};
}

Form<GroupSpace> Q_form(double lambda, Level k) {
  return {2, [lambda, k](const SU2Matrix& h, std::span<const AlgebraElement> d) {
            return Complex(eval_Q(lambda, h, d[0], d[1], k), 0.0);
          }};
}

Form<GroupSpace> F_form(double coeff) {
  return {2, [coeff](const SU2Matrix& h, std::span<const AlgebraElement> d) {
            return Complex(eval_F(coeff, h, d[0], d[1]), 0.0);
          }};
}

Form<ProductSpace> rho_form(Level k) {
  return {2, [k](const ProductSpace::Point& p,
                 std::span<const ProductSpace::Direction> d) {
            return Complex(eval_rho(p.first, p.second, d[0], d[1], k), 0.0);
          }};
}

Form<WeightGroupSpace> curving_form(double lambda_c, Level k) {
  return {2, [lambda_c, k](const WeightGroupSpace::Point& p,
                           std::span<const WeightGroupSpace::Direction> d) {
            const double q = eval_Q(p.first, p.second, d[0].second, d[1].second, k);
            const double f =
                eval_F(p.first - lambda_c, p.second, d[0].second, d[1].second);
            return Complex(q + f, 0.0);
          }};
}

AlgebraElement conjugation_pushforward(double lambda, const SU2Matrix& h, double s,
                                       const AlgebraElement& x, Level k, double step) {
  const auto image = [&](double eps) {
    const SU2Matrix hh = exp_algebra(eps * x) * h;
    return adjoint(hh, torus_element(lambda + eps * s, k).matrix());
  };
  const Mat2 g = image(0.0);
  const Mat2 deriv = (1.0 / (2.0 * step)) * (image(step) - image(-step));
  return AlgebraElement::project(deriv * dagger(g));
}

double pw_residual(const SU2Matrix& g1, const SU2Matrix& g2,
                   const std::array<ProductSpace::Direction, 3>& dirs, Level k,
                   double step) {
  double lhs = eval_H(g1, dirs[0].first, dirs[1].first, dirs[2].first, k) +
               eval_H(g2, dirs[0].second, dirs[1].second, dirs[2].second, k);
  std::array<AlgebraElement, 3> md;
  for (std::size_t i = 0; i < 3; ++i)
    md[i] = dirs[i].first + algebra_adjoint(g1, dirs[i].second);
  const double mh = eval_H(g1 * g2, md[0], md[1], md[2], k);
  const Form<ProductSpace> rho = rho_form(k);
  const Complex drho = numeric_d(rho, {g1, g2}, std::span(dirs.data(), 3), step);
  return std::abs(lhs - mh - drho.real());
}

namespace {

void require_axis(int axis) {
  if (axis < 1 || axis > 3)
    throw std::domain_error("omega_contract: axis must be 1, 2 or 3");
}

}  // namespace

double omega_contract(const WeightTriple& t, const SU2Matrix& h, int a_axis,
                      int b_axis) {
  require_axis(a_axis);
  require_axis(b_axis);
  const RegionClass r = classify_region(t);
  if (r.stratum == Stratum::Outside || !r.in_F_dot)
    throw std::domain_error("omega_contract: triple outside F-dot");
  const auto [g1, g2] = tau(t, h);
  const SU2Matrix gm = g1 * g2;
  const Mat2 sa = sigma(a_axis);
  const Mat2 isb = kI * sigma(b_axis);
  const double pref = (t.k.real() / (4.0 * kPi));
  // (ik/4pi) tr(sigma_A (Ad_g - Ad_{g^-1}) theta_R) evaluated on V_B
  const auto flip = [&](const SU2Matrix& g) {
    return adjoint(g, isb) - adjoint(g.inverse(), isb);
  };
  const auto term = [&](const Mat2& m) {
    return pref * (kI * trace(sa * m)).real();
  };
  const double t1 = term(flip(g1));
  const double t2 = term(flip(g2));
  const double tm = term(flip(gm));
  const double trho = term(flip(g1) + flip(g2) - flip(gm));
  return tm + trho - t1 - t2;
}

double omega_contract_pullback(const WeightTriple& t, const SU2Matrix& h, int a_axis,
                               int b_axis) {
  require_axis(a_axis);
  require_axis(b_axis);
  const RegionClass r = classify_region(t);
  if (r.stratum == Stratum::Outside || !r.in_F_dot)
    throw std::domain_error("omega_contract_pullback: triple outside F-dot");
  const JunctionFrame f = solve_junction(t);
  const auto [g1, g2] = tau(t, h);

  const AlgebraElement va = AlgebraElement::from_coefficients(
      a_axis == 1 ? 1.0 : 0.0, a_axis == 2 ? 1.0 : 0.0, a_axis == 3 ? 1.0 : 0.0);
  const AlgebraElement vb = AlgebraElement::from_coefficients(
      b_axis == 1 ? 1.0 : 0.0, b_axis == 2 ? 1.0 : 0.0, b_axis == 3 ? 1.0 : 0.0);

  // q1, q2, qm move the base point; the frame direction rides along
  const double q1 = eval_Q(t.lambda, h, va, vb, t.k);
  const double q2 = eval_Q(t.mu, h * f.a, va, vb, t.k);
  const double qm = eval_Q(t.nu, h * f.b, va, vb, t.k);

  // tau pushforward: d/deps Ad_{exp(eps X) h}(t) = X - Ad_g(X) at g
  const auto push = [](const SU2Matrix& g, const AlgebraElement& x) {
    return x - algebra_adjoint(g, x);
  };
  const ProductSpace::Direction wa{push(g1, va), push(g2, va)};
  const ProductSpace::Direction wb{push(g1, vb), push(g2, vb)};
  const double rho = eval_rho(g1, g2, wa, wb, t.k);

  return qm + rho - q1 - q2;
}

double eval_A_connection(const IntWeightTriple& t, const ChartTriple& charts,
                         const SU2Matrix& h, const AlgebraElement& x) {
  const Form<GroupSpace> form = A_connection_form(t, charts);
  const AlgebraElement dirs[1] = {x};
  return form.eval(h, dirs).real();
}

Form<GroupSpace> A_connection_form(const IntWeightTriple& t, const ChartTriple& charts) {
  if (!in_polytope(t))
    throw std::domain_error("A_connection_form: triple outside F_Z");
  const auto valid = [&](const ChartPair& p) {
    return chart_valid(t.lambda, p.l, t.k) && chart_valid(t.mu, p.m, t.k) &&
           chart_valid(t.nu, chart_sum(p.l, p.m), t.k);
  };
  if (!valid(charts.first) || !valid(charts.second) || !valid(charts.third))
    throw std::domain_error("A_connection_form: chart triple invalid");

  const JunctionFrame f = solve_junction(t.to_real());
  const Mat2 lam = fundamental_weight();
  const double c1 = static_cast<double>(t.lambda) - vertex_weight(charts.l1(), t.k);
  const double c2 = static_cast<double>(t.mu) - vertex_weight(charts.m2(), t.k);
  const double c3 = static_cast<double>(t.nu) - vertex_weight(charts.nu_chart(), t.k);
  const Mat2 coeff = c1 * lam + c2 * adjoint(f.a, lam) + (-c3) * adjoint(f.b, lam);
  return {1, [coeff](const SU2Matrix& h, std::span<const AlgebraElement> d) {
            return kI * trace(coeff * left_mc(h, d[0]));
          }};
}

double period_integral(double lambda, int l, Level k, int n_phi, int n_theta) {
  if (n_phi < 64 || n_theta < 32)
    throw std::domain_error("period_integral: grid must be at least (64, 32)");
  if (l != 0 && l != 1) throw std::domain_error("period_integral: l must be 0 or 1");
  if (!(lambda >= 0.0 && lambda <= k.real()))
    throw std::domain_error("period_integral: weight outside [0, k]");

  const double coeff = lambda - vertex_weight(l, k);
  const auto chart_h = [](double phi, double v) {
    const double theta = 0.5 * std::acos(std::clamp(1.0 - 2.0 * v, -1.0, 1.0));
    return euler(phi, theta, 0.0);
  };

  const double dphi = kPi / n_phi;
  const double dv = 1.0 / n_theta;
  double total = 0.0;
  for (int i = 0; i < n_phi; ++i) {
    const double phi = (i + 0.5) * dphi;
    for (int j = 0; j < n_theta; ++j) {
      const double v = (j + 0.5) * dv;
      const SU2Matrix h = chart_h(phi, v);
      const Mat2 hdag = h.inverse().matrix();
      const AlgebraElement vphi = AlgebraElement::project(
          (1.0 / (2.0 * kChartStep)) *
          (chart_h(phi + kChartStep, v).matrix() - chart_h(phi - kChartStep, v).matrix()) *
          hdag);
      const AlgebraElement vv = AlgebraElement::project(
          (1.0 / (2.0 * kChartStep)) *
          (chart_h(phi, v + kChartStep).matrix() - chart_h(phi, v - kChartStep).matrix()) *
          hdag);
      total += -eval_F(coeff, h, vphi, vv) * dphi * dv;
    }
  }
  return total;
}

}  // namespace fusion_gerbe
