#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fusion_gerbe/fusion_ring.hpp"
#include "fusion_gerbe/obstruction.hpp"

using namespace fusion_gerbe;

namespace {
constexpr double kPi = std::numbers::pi;

ChartTriple all_zero_charts() { return {{0, 0}, {0, 0}, {0, 0}}; }
}  // namespace

TEST_CASE("characters") {
  CHECK(character({0}, 1.234) == Complex(1.0, 0.0));
  // chi_lambda(-e) = (-1)^lambda
  CHECK(character({3}, kPi).real() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(character({4}, kPi).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(character({2}, kPi / 2).real() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(character({2}, kPi / 2).imag()) < 1e-12);
}

TEST_CASE("groupoid character identity") {
  // chi_{lambda_{i,j}} chi_{lambda_{j,k}} = chi_{lambda_{i,k}} as index arithmetic
  const Level k(4);
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j)
      for (int l = 0; l <= 1; ++l) {
        const double vi = vertex_weight(i, k), vj = vertex_weight(j, k),
                     vl = vertex_weight(l, k);
        CHECK((vj - vi) + (vl - vj) == vl - vi);
      }
}

TEST_CASE("boundary character index") {
  const Level k(4);
  CHECK(boundary_char_index({1, 2, 3, k}, all_zero_charts()).xi == 0);
  // (3,3,2): face nu = 2k - lambda - mu, n = 1, eps(b) = -1
  const ChartTriple charts{{1, 0}, {0, 1}, {1, 1}};  // l1 = 1, m2 = 1, nu chart 0
  CHECK(boundary_char_index({3, 3, 2, k}, charts).xi == 2 * 4 * 1 - 4 - 4 + 0);
  CHECK(boundary_char_index({1, 1, 0, Level(2)}, all_zero_charts()).xi == 0);
  CHECK_THROWS_AS(boundary_char_index({1, 2, 2, k}, all_zero_charts()),
                  std::domain_error);
}

TEST_CASE("interior character parity") {
  const Level k4(4);
  CHECK(interior_char_parity({1, 2, 2, k4}, all_zero_charts()) == 0);
  // a chart with lambda_{l1} = k and the rest 0: parity of k
  const ChartTriple charts_k{{1, 0}, {0, 0}, {0, 0}};
  CHECK(interior_char_parity({2, 2, 2, Level(4)}, charts_k) == 0);
  CHECK(interior_char_parity({2, 2, 2, Level(5)}, charts_k) == 1);
  // rejected branch flips the parity
  CHECK(interior_char_parity({1, 2, 2, k4}, all_zero_charts(), 1) == 1);
  CHECK_THROWS_AS(interior_char_parity({1, 2, 3, k4}, all_zero_charts()),
                  std::domain_error);
}

TEST_CASE("delta exponent") {
  const Level k(4);
  // corners carry trivial characters
  for (const auto& t : enumerate_FZ(k)) {
    if (classify_region(t).stratum != Stratum::Corner) continue;
    for (const auto& c : valid_chart_triples(t))
      CHECK(delta_exponent(t, c).e == 0);
  }
  // boundary: exact cancellation for every valid chart
  for (const auto& c : valid_chart_triples(IntWeightTriple{1, 2, 3, k}))
    CHECK(delta_exponent({1, 2, 3, k}, c).e == 0);
  // interior: parity of lambda + mu - nu, chart-independent
  for (const auto& c : valid_chart_triples(IntWeightTriple{1, 2, 2, k})) {
    const auto e = delta_exponent({1, 2, 2, k}, c).e;
    CHECK(((e % 2) + 2) % 2 == 1);
  }
}

TEST_CASE("delta verdict is chart independent") {
  for (int kk = 1; kk <= 8; ++kk) {
    const Level k(kk);
    for (const auto& t : enumerate_FZ(k)) {
      const RegionClass r = classify_region(t);
      if (r.stratum == Stratum::Corner) continue;
      bool first = true;
      bool verdict = false;
      for (const auto& c : valid_chart_triples(t)) {
        const auto e = delta_exponent(t, c).e;
        const bool ok =
            r.stratum == Stratum::BoundaryNonCorner ? (e == 0) : (e % 2 == 0);
        if (first) {
          verdict = ok;
          first = false;
        } else {
          CHECK(verdict == ok);
        }
      }
    }
  }
}

TEST_CASE("interior parity is chart dependent but delta is not") {
  // odd level: chart vertex weights are 0 or 5, so the parity depends on
  // the chart while the delta verdict does not
  const Level k(5);
  const IntWeightTriple t{2, 2, 2, k};
  REQUIRE(classify_region(t).stratum == Stratum::Interior);
  bool saw_zero = false, saw_one = false;
  for (const auto& c : valid_chart_triples(t)) {
    const int p = interior_char_parity(t, c);
    (p == 0 ? saw_zero : saw_one) = true;
    CHECK(delta_exponent(t, c).e % 2 == 0);
  }
  CHECK(saw_zero);  // charts with all vertices 0
  CHECK(saw_one);   // charts with an odd number of k = 5 vertices
}

TEST_CASE("fusion 2-isomorphism existence") {
  const Level k(4);
  CHECK(fusion_2iso_exists({1, 2, 3, k}));
  CHECK_FALSE(fusion_2iso_exists({1, 2, 2, k}));
  for (std::int64_t mu = 0; mu <= 4; ++mu) CHECK(fusion_2iso_exists({0, mu, mu, k}));
  CHECK_FALSE(fusion_2iso_exists({0, 0, 1, k}));  // outside F
  CHECK_THROWS_AS(fusion_2iso_exists({0, 0, 7, k}), std::domain_error);
}

TEST_CASE("interior verdict equals the parity law, boundary always true") {
  for (int kk = 1; kk <= 12; ++kk) {
    const Level k(kk);
    for (const auto& t : enumerate_FZ(k)) {
      const RegionClass r = classify_region(t);
      const bool exists = fusion_2iso_exists(t);
      if (r.stratum == Stratum::Interior)
        CHECK(exists == ((t.lambda + t.mu - t.nu) % 2 == 0));
      else
        CHECK(exists);
    }
  }
}

TEST_CASE("V_G sets") {
  const auto vg1 = compute_VG(Level(1));
  REQUIRE(vg1.size() == 4);
  CHECK(vg1[0] == IntWeightTriple{0, 0, 0, Level(1)});
  CHECK(vg1[1] == IntWeightTriple{0, 1, 1, Level(1)});
  CHECK(vg1[2] == IntWeightTriple{1, 0, 1, Level(1)});
  CHECK(vg1[3] == IntWeightTriple{1, 1, 0, Level(1)});

  const auto vg4 = compute_VG(Level(4));
  CHECK(vg4.size() == 35);
  const auto fz4 = enumerate_FZ(Level(4));
  CHECK(std::includes(fz4.begin(), fz4.end(), vg4.begin(), vg4.end()));
}

TEST_CASE("rejected interior branch flips the interior law") {
  const Level k(4);
  CHECK_FALSE(fusion_2iso_exists({1, 2, 2, k}, 0));
  CHECK(fusion_2iso_exists({1, 2, 2, k}, 1));
  CHECK(fusion_2iso_exists({2, 2, 2, k}, 0));
  CHECK_FALSE(fusion_2iso_exists({2, 2, 2, k}, 1));
}
