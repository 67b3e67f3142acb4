#ifndef FUSION_GERBE_ALCOVE_HPP
#define FUSION_GERBE_ALCOVE_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "fusion_gerbe/su2.hpp"

namespace fusion_gerbe {

/// Real-valued weight triple (lambda, mu, nu) at level k. Used by the
/// geometric code; the fusion/obstruction code works with IntWeightTriple.
struct WeightTriple {
  double lambda, mu, nu;
  Level k;
};

struct IntWeightTriple {
  std::int64_t lambda, mu, nu;
  Level k;

  WeightTriple to_real() const {
    return {static_cast<double>(lambda), static_cast<double>(mu),
            static_cast<double>(nu), k};
  }
  friend bool operator==(const IntWeightTriple&, const IntWeightTriple&) = default;
  friend auto operator<=>(const IntWeightTriple& a, const IntWeightTriple& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    if (auto c = a.lambda <=> b.lambda; c != 0) return c;
    if (auto c = a.mu <=> b.mu; c != 0) return c;
    return a.nu <=> b.nu;
  }
};

enum class Stratum { Outside, Corner, BoundaryNonCorner, Interior };

/// Stratum of the fusion polytope together with the F-dot flag
/// (all three components strictly inside (0, k)).
struct RegionClass {
  Stratum stratum;
  bool in_F_dot;
};

/// |lambda - mu| <= nu <= min(lambda + mu, 2k - lambda - mu), components in [0,k].
/// Comparisons are exact on the stored doubles.
bool in_polytope(const WeightTriple& t);
bool in_polytope(const IntWeightTriple& t);

/// Real inputs classified with tolerance kRegionTol; integer inputs exactly.
RegionClass classify_region(const WeightTriple& t);
RegionClass classify_region(const IntWeightTriple& t);

/// All integer triples in F, lexicographically sorted.
std::vector<IntWeightTriple> enumerate_FZ(Level k);

/// Cover-chart index pair (l, m), each in {0, 1}; the nu-chart is l + m (mod 2).
struct ChartPair {
  int l, m;
  friend bool operator==(const ChartPair&, const ChartPair&) = default;
};

int chart_sum(int l, int m);           // l + m (mod 2)
double vertex_weight(int l, Level k);  // lambda_0 = 0, lambda_1 = k

/// Chart l is valid for weight w iff C_{w;l} is non-empty:
/// l = 0 is excluded when w = k, l = 1 when w = 0.
bool chart_valid(std::int64_t w, int l, Level k);

/// Triple of chart pairs indexing a sheet of Y^[3] T.
struct ChartTriple {
  ChartPair first, second, third;
  int l1() const { return first.l; }
  int m2() const { return second.m; }
  int nu_chart() const { return chart_sum(third.l, third.m); }
  friend bool operator==(const ChartTriple&, const ChartTriple&) = default;
};

std::vector<ChartPair> valid_chart_pairs(const IntWeightTriple& t);

/// All triples of valid chart pairs. Throws std::domain_error if t is
/// not an integer point of F.
std::vector<ChartTriple> valid_chart_triples(const IntWeightTriple& t);

}  // namespace fusion_gerbe

#endif
