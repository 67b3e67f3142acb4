#ifndef FUSION_GERBE_FUSION_RING_HPP
#define FUSION_GERBE_FUSION_RING_HPP

#include <cstdint>
#include <vector>

#include "fusion_gerbe/alcove.hpp"

namespace fusion_gerbe {

/// Element of the fusion ring at level k: integer multiplicities indexed
/// by the weights 0..k, stored densely.
class FusionVector {
 public:
  explicit FusionVector(Level k) : k_(k), coeff_(static_cast<std::size_t>(k.value()) + 1, 0) {}
  static FusionVector basis(std::int64_t lambda, Level k);

  Level level() const { return k_; }
  std::int64_t operator[](std::int64_t nu) const;
  std::int64_t& at(std::int64_t nu);
  const std::vector<std::int64_t>& coefficients() const { return coeff_; }

  friend bool operator==(const FusionVector&, const FusionVector&) = default;

 private:
  Level k_;
  std::vector<std::int64_t> coeff_;
};

/// [lambda] * [mu]: multiplicity 1 on nu = |lambda-mu|, |lambda-mu|+2, ...,
/// min(lambda+mu, 2k-lambda-mu), zero elsewhere.
FusionVector fusion_product(std::int64_t lambda, std::int64_t mu, Level k);

/// V = { (lambda, mu, nu) : [nu] appears in [lambda] * [mu] }, sorted.
std::vector<IntWeightTriple> compute_V(Level k);

/// Bilinear extension of the fusion product. Throws on level mismatch.
FusionVector ring_multiply(const FusionVector& u, const FusionVector& v);

/// Modular S-matrix entry sqrt(2/(k+2)) sin(pi (a+1)(b+1) / (k+2)).
double smatrix_entry(std::int64_t a, std::int64_t b, Level k);

/// Verlinde coefficient sum_s S_{ls} S_{ms} S_{ns} / S_{0s}; an oracle
/// independent of the step-two sum.
struct VerlindeCoeff {
  double raw;
  std::int64_t rounded;
  double deviation;  // |raw - rounded|
};

VerlindeCoeff verlinde_coeff(std::int64_t lambda, std::int64_t mu, std::int64_t nu,
                             Level k);

struct TheoremReport {
  int level;
  std::size_t v_size = 0, vg_size = 0;
  std::vector<IntWeightTriple> v_only, vg_only;  // symmetric difference
  bool verdict = false;                          // true iff V == V_G
};

/// Compares V (representation theory) against V_G (gerbe obstruction),
/// exhaustively over (P^k_+)^3. The lambda-rows may be sharded over
/// `workers` threads; the report is assembled in sorted order.
TheoremReport verify_theorem(Level k, int interior_epsilon = 0, int workers = 1);

}  // namespace fusion_gerbe

#endif
