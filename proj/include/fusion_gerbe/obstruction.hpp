#ifndef FUSION_GERBE_OBSTRUCTION_HPP
#define FUSION_GERBE_OBSTRUCTION_HPP

#include <cstdint>
#include <vector>

#include "fusion_gerbe/alcove.hpp"
#include "fusion_gerbe/su2.hpp"

namespace fusion_gerbe {

/// Index xi of the torus character chi_xi(e^{i phi sigma3}) = e^{-i xi phi};
/// chi_0 is identically 1. Indices add under tensor products.
struct CharacterIndex {
  std::int64_t xi = 0;
};

Complex character(CharacterIndex xi, double phi);

/// Character index of the stable-isomorphism bundle on a boundary triple:
/// xi = 2k n - lambda_{l1} - eps(a) lambda_{m2} + eps(b) lambda_{l3+m3},
/// with the signs and n taken from the exact face table.
/// Requires t on the boundary of F and a valid chart triple.
CharacterIndex boundary_char_index(const IntWeightTriple& t, const ChartTriple& charts);

/// Exponent of the interior Z2-character on the nontrivial centre element:
/// (lambda_{l3+m3} - lambda_{l1} - lambda_{m2} + interior_epsilon) mod 2.
/// interior_epsilon = 0 is the established branch; 1 is the rejected one,
/// kept for the negative test.
int interior_char_parity(const IntWeightTriple& t, const ChartTriple& charts,
                         int interior_epsilon = 0);

/// Total sigma3-character exponent of Delta on the isotropy subgroup.
/// On U(1) strata Delta = 1 iff e = 0; on the Z2 stratum iff e is even;
/// corners carry only trivial characters and report e = 0.
struct DeltaExponent {
  std::int64_t e = 0;
};

DeltaExponent delta_exponent(const IntWeightTriple& t, const ChartTriple& charts,
                             int interior_epsilon = 0);

/// Existence of the fusion 2-isomorphism: Delta = 1 on the isotropy
/// subgroup for every valid chart triple. Integer arithmetic throughout.
bool fusion_2iso_exists(const IntWeightTriple& t, int interior_epsilon = 0);

/// V_G = { t in (P^k_+)^3 : the fusion 2-isomorphism exists }, sorted.
std::vector<IntWeightTriple> compute_VG(Level k, int interior_epsilon = 0);

}  // namespace fusion_gerbe

#endif
