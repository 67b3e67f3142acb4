#include "fusion_gerbe/obstruction.hpp"

#include <cmath>
#include <stdexcept>

#include "fusion_gerbe/junction.hpp"

namespace fusion_gerbe {

namespace {

std::int64_t vertex_int(int l, Level k) { return l == 0 ? 0 : k.value(); }

void require_valid_charts(const IntWeightTriple& t, const ChartTriple& c) {
  const auto ok = [&](const ChartPair& p) {
    return chart_valid(t.lambda, p.l, t.k) && chart_valid(t.mu, p.m, t.k) &&
           chart_valid(t.nu, chart_sum(p.l, p.m), t.k);
  };
  if (!ok(c.first) || !ok(c.second) || !ok(c.third))
    throw std::domain_error("chart triple invalid for the given weights");
}

}  // namespace

Complex character(CharacterIndex xi, double phi) {
  if (xi.xi == 0) return Complex(1.0, 0.0);
  return std::polar(1.0, -static_cast<double>(xi.xi) * phi);
}

CharacterIndex boundary_char_index(const IntWeightTriple& t, const ChartTriple& charts) {
  require_valid_charts(t, charts);
  const auto face = boundary_face_signs(t);
  if (!face) throw std::domain_error("boundary_char_index: triple not on the boundary");
  const std::int64_t xi = 2 * t.k.value() * face->n - vertex_int(charts.l1(), t.k) -
                          face->eps_a * vertex_int(charts.m2(), t.k) +
                          face->eps_b * vertex_int(charts.nu_chart(), t.k);
  return CharacterIndex{xi};
}

int interior_char_parity(const IntWeightTriple& t, const ChartTriple& charts,
                         int interior_epsilon) {
  require_valid_charts(t, charts);
  if (classify_region(t).stratum != Stratum::Interior)
    throw std::domain_error("interior_char_parity: triple not in the interior");
  const std::int64_t e = vertex_int(charts.nu_chart(), t.k) -
                         vertex_int(charts.l1(), t.k) -
                         vertex_int(charts.m2(), t.k) + interior_epsilon;
  return static_cast<int>(((e % 2) + 2) % 2);
}

DeltaExponent delta_exponent(const IntWeightTriple& t, const ChartTriple& charts,
                             int interior_epsilon) {
  require_valid_charts(t, charts);
  const RegionClass r = classify_region(t);
  if (r.stratum == Stratum::Outside)
    throw std::domain_error("delta_exponent: triple outside F");
  if (r.stratum == Stratum::Corner) return DeltaExponent{0};

  const std::int64_t lv1 = vertex_int(charts.l1(), t.k);
  const std::int64_t lv2 = vertex_int(charts.m2(), t.k);
  const std::int64_t lv3 = vertex_int(charts.nu_chart(), t.k);

  if (r.stratum == Stratum::BoundaryNonCorner) {
    const auto face = boundary_face_signs(t);
    const std::int64_t chi = boundary_char_index(t, charts).xi;
    return DeltaExponent{chi + face->eps_b * (t.nu - lv3) - (t.lambda - lv1) -
                         face->eps_a * (t.mu - lv2)};
  }
  // interior: eps(a) = eps(b) = +1 and the Z2 character contributes its parity
  const std::int64_t chi = lv3 - lv1 - lv2 + interior_epsilon;
  return DeltaExponent{chi + (t.nu - lv3) - (t.lambda - lv1) - (t.mu - lv2)};
}

bool fusion_2iso_exists(const IntWeightTriple& t, int interior_epsilon) {
  const std::int64_t k = t.k.value();
  if (t.lambda < 0 || t.lambda > k || t.mu < 0 || t.mu > k || t.nu < 0 || t.nu > k)
    throw std::domain_error("fusion_2iso_exists: weights outside P^k_+");
  const RegionClass r = classify_region(t);
  if (r.stratum == Stratum::Outside) return false;
  if (r.stratum == Stratum::Corner) return true;
  for (const ChartTriple& c : valid_chart_triples(t)) {
    const std::int64_t e = delta_exponent(t, c, interior_epsilon).e;
    if (r.stratum == Stratum::BoundaryNonCorner) {
      if (e != 0) return false;
    } else {
      if (e % 2 != 0) return false;
    }
  }
  return true;
}

std::vector<IntWeightTriple> compute_VG(Level k, int interior_epsilon) {
  std::vector<IntWeightTriple> out;
  const std::int64_t kk = k.value();
  for (std::int64_t l = 0; l <= kk; ++l)
    for (std::int64_t m = 0; m <= kk; ++m)
      for (std::int64_t n = 0; n <= kk; ++n) {
        const IntWeightTriple t{l, m, n, k};
        if (fusion_2iso_exists(t, interior_epsilon)) out.push_back(t);
      }
  return out;
}

}  // namespace fusion_gerbe
