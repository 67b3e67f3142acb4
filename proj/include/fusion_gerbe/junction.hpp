#ifndef FUSION_GERBE_JUNCTION_HPP
#define FUSION_GERBE_JUNCTION_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "fusion_gerbe/alcove.hpp"
#include "fusion_gerbe/su2.hpp"

namespace fusion_gerbe {

/// Solution (a, b) of t_lambda Ad_a(t_mu) = Ad_b(t_nu) together with the
/// angles that parameterise it: a = e^{i theta sigma2},
/// b = e^{i phi' sigma3} e^{i theta' sigma2} with phi' = pi lambda / (2k).
/// Weights at 0 or k route to the constant extension table instead.
struct JunctionFrame {
  SU2Matrix a, b;
  double theta = 0.0;
  double theta_prime = 0.0;
  double phi_prime = 0.0;
};

/// Throws std::domain_error outside F; std::runtime_error if the closed
/// forms produce sin^2/cos^2 outside [-kClampTol, 1 + kClampTol].
JunctionFrame solve_junction(const WeightTriple& t);
SU2Matrix solve_a(const WeightTriple& t);
SU2Matrix solve_b(const WeightTriple& t);

/// || t_lambda Ad_a(t_mu) - Ad_b(t_nu) ||_F with a, b from the solvers.
double junction_residual(const WeightTriple& t);

/// tau(t, h) = (Ad_h(t_lambda), Ad_{h a}(t_mu)), a point of T_{lambda,mu}^nu.
std::pair<SU2Matrix, SU2Matrix> tau(const WeightTriple& t, const SU2Matrix& h);

enum class Sign : int { Plus = 1, Minus = -1 };
inline int sign_value(Sign s) { return static_cast<int>(s); }

/// -1 exactly on U(1) i sigma2 (detected as |g11| < kDiagTol), +1 otherwise.
Sign epsilon(const SU2Matrix& g);

enum class IsotropySubgroup { FullSU2, CircleU1, CenterZ2 };

/// SU(2) on corners, U(1) on the boundary less the corners, Z_2 inside.
IsotropySubgroup isotropy_group(const WeightTriple& t);
IsotropySubgroup isotropy_group(const IntWeightTriple& t);

/// n with lambda + eps(a) mu - eps(b) nu = 2 k n, for integer triples on
/// the boundary of F. Throws std::runtime_error if the quotient misses an
/// integer by more than kRegionTol.
std::int64_t winding_integer(const IntWeightTriple& t);

/// Exact sign data (eps(a), eps(b), n) on the boundary of F, derived from
/// the closed-form solvers: nu = lambda+mu -> (+1,+1,0);
/// nu = lambda-mu -> (-1,+1,0); nu = mu-lambda -> (-1,-1,0);
/// nu = 2k-lambda-mu -> (+1,-1,1). Triples meeting several faces (a weight
/// at 0 or k) take the signs of the extension-table frames.
struct FaceSigns {
  int eps_a, eps_b;
  std::int64_t n;
};

/// nullopt off the boundary of F.
std::optional<FaceSigns> boundary_face_signs(const IntWeightTriple& t);

}  // namespace fusion_gerbe

#endif
