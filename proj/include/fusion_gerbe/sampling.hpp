#ifndef FUSION_GERBE_SAMPLING_HPP
#define FUSION_GERBE_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "fusion_gerbe/alcove.hpp"
#include "fusion_gerbe/su2.hpp"

namespace fusion_gerbe {

using Rng = std::mt19937_64;

/// Seed split policy: each named check draws from its own engine seeded
/// with splitmix64(master ^ fnv1a(name)), so results are independent of
/// evaluation order and worker count.
std::uint64_t derive_seed(std::uint64_t master, std::string_view check_name);

/// Haar-uniform SU(2) element (normalised 4-vector of gaussians).
SU2Matrix haar_su2(Rng& rng);

/// Algebra element with gaussian frame coefficients of the given scale.
AlgebraElement random_algebra(Rng& rng, double scale = 1.0);

/// Uniform triple in F-dot = F intersect (0,k)^3, components at least
/// `margin` away from 0 and k (rejection sampling).
WeightTriple random_triple_in_Fdot(Level k, Rng& rng, double margin = 1e-3);

/// The four boundary faces of the fusion polytope.
enum class Face { SumLower, DiffLM, DiffML, SumUpper };

/// Real triple on a single face, components and the face value at least
/// `margin` from the alcove ends, away from the other faces.
WeightTriple random_face_triple(Face face, Level k, Rng& rng, double margin = 0.05);

/// Integer triple on a single face, strictly off the other faces and with
/// all components in (0, k). Requires k >= 4.
IntWeightTriple random_int_face_triple(Face face, Level k, Rng& rng);

}  // namespace fusion_gerbe

#endif
