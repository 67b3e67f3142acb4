#include "fusion_gerbe/alcove.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fusion_gerbe {

bool in_polytope(const WeightTriple& t) {
  const double k = t.k.real();
  if (!(t.lambda >= 0.0 && t.lambda <= k)) return false;
  if (!(t.mu >= 0.0 && t.mu <= k)) return false;
  if (!(t.nu >= 0.0 && t.nu <= k)) return false;
  const double lower = std::abs(t.lambda - t.mu);
  const double upper = std::min(t.lambda + t.mu, 2.0 * k - t.lambda - t.mu);
  return lower <= t.nu && t.nu <= upper;
}

bool in_polytope(const IntWeightTriple& t) {
  const std::int64_t k = t.k.value();
  if (t.lambda < 0 || t.lambda > k || t.mu < 0 || t.mu > k || t.nu < 0 || t.nu > k)
    return false;
  const std::int64_t lower = std::abs(t.lambda - t.mu);
  const std::int64_t upper = std::min(t.lambda + t.mu, 2 * k - t.lambda - t.mu);
  return lower <= t.nu && t.nu <= upper;
}

RegionClass classify_region(const WeightTriple& t) {
  if (!in_polytope(t)) return {Stratum::Outside, false};
  const double k = t.k.real();
  const auto near_vertex = [&](double w) {
    return std::abs(w) <= kRegionTol || std::abs(w - k) <= kRegionTol;
  };
  const bool in_F_dot = t.lambda > kRegionTol && t.lambda < k - kRegionTol &&
                        t.mu > kRegionTol && t.mu < k - kRegionTol &&
                        t.nu > kRegionTol && t.nu < k - kRegionTol;
  if (near_vertex(t.lambda) && near_vertex(t.mu) && near_vertex(t.nu))
    return {Stratum::Corner, in_F_dot};
  const double lower = std::abs(t.lambda - t.mu);
  const double upper = std::min(t.lambda + t.mu, 2.0 * k - t.lambda - t.mu);
  if (std::abs(t.nu - lower) <= kRegionTol || std::abs(t.nu - upper) <= kRegionTol)
    return {Stratum::BoundaryNonCorner, in_F_dot};
  return {Stratum::Interior, in_F_dot};
}

RegionClass classify_region(const IntWeightTriple& t) {
  if (!in_polytope(t)) return {Stratum::Outside, false};
  const std::int64_t k = t.k.value();
  const auto at_vertex = [&](std::int64_t w) { return w == 0 || w == k; };
  const bool in_F_dot = t.lambda > 0 && t.lambda < k && t.mu > 0 && t.mu < k &&
                        t.nu > 0 && t.nu < k;
  if (at_vertex(t.lambda) && at_vertex(t.mu) && at_vertex(t.nu))
    return {Stratum::Corner, in_F_dot};
  const std::int64_t lower = std::abs(t.lambda - t.mu);
  const std::int64_t upper = std::min(t.lambda + t.mu, 2 * k - t.lambda - t.mu);
  if (t.nu == lower || t.nu == upper)
    return {Stratum::BoundaryNonCorner, in_F_dot};
  return {Stratum::Interior, in_F_dot};
}

std::vector<IntWeightTriple> enumerate_FZ(Level k) {
  std::vector<IntWeightTriple> out;
  const std::int64_t kk = k.value();
  for (std::int64_t l = 0; l <= kk; ++l)
    for (std::int64_t m = 0; m <= kk; ++m)
      for (std::int64_t n = 0; n <= kk; ++n) {
        const IntWeightTriple t{l, m, n, k};
        if (in_polytope(t)) out.push_back(t);
      }
  return out;  // loop order is already lexicographic
}

int chart_sum(int l, int m) { return (l + m) % 2; }

double vertex_weight(int l, Level k) { return l == 0 ? 0.0 : k.real(); }

bool chart_valid(std::int64_t w, int l, Level k) {
  if (l == 0) return w != k.value();
  return w != 0;
}

std::vector<ChartPair> valid_chart_pairs(const IntWeightTriple& t) {
  std::vector<ChartPair> out;
  for (int l = 0; l <= 1; ++l)
    for (int m = 0; m <= 1; ++m) {
      if (chart_valid(t.lambda, l, t.k) && chart_valid(t.mu, m, t.k) &&
          chart_valid(t.nu, chart_sum(l, m), t.k))
        out.push_back({l, m});
    }
  return out;
}

std::vector<ChartTriple> valid_chart_triples(const IntWeightTriple& t) {
  if (!in_polytope(t))
    throw std::domain_error("valid_chart_triples: triple outside F_Z");
  const auto pairs = valid_chart_pairs(t);
  std::vector<ChartTriple> out;
  out.reserve(pairs.size() * pairs.size() * pairs.size());
  for (const auto& p1 : pairs)
    for (const auto& p2 : pairs)
      for (const auto& p3 : pairs) out.push_back({p1, p2, p3});
  return out;
}

}  // namespace fusion_gerbe
