#include "fusion_gerbe/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "fusion_gerbe/obstruction.hpp"

namespace fusion_gerbe {

namespace {

void require_weight(std::int64_t w, Level k, const char* what) {
  if (w < 0 || w > k.value())
    throw std::domain_error(std::string(what) + ": weight outside P^k_+");
}

}  // namespace

FusionVector FusionVector::basis(std::int64_t lambda, Level k) {
  require_weight(lambda, k, "FusionVector::basis");
  FusionVector v(k);
  v.at(lambda) = 1;
  return v;
}

std::int64_t FusionVector::operator[](std::int64_t nu) const {
  if (nu < 0 || nu > k_.value()) return 0;
  return coeff_[static_cast<std::size_t>(nu)];
}

std::int64_t& FusionVector::at(std::int64_t nu) {
  require_weight(nu, k_, "FusionVector::at");
  return coeff_[static_cast<std::size_t>(nu)];
}

FusionVector fusion_product(std::int64_t lambda, std::int64_t mu, Level k) {
  require_weight(lambda, k, "fusion_product");
  require_weight(mu, k, "fusion_product");
  FusionVector out(k);
  const std::int64_t lower = std::abs(lambda - mu);
  const std::int64_t upper = std::min(lambda + mu, 2 * k.value() - lambda - mu);
  for (std::int64_t nu = lower; nu <= upper; nu += 2) out.at(nu) = 1;
  return out;
}

std::vector<IntWeightTriple> compute_V(Level k) {
  std::vector<IntWeightTriple> out;
  for (std::int64_t l = 0; l <= k.value(); ++l)
    for (std::int64_t m = 0; m <= k.value(); ++m) {
      const FusionVector prod = fusion_product(l, m, k);
      for (std::int64_t n = 0; n <= k.value(); ++n)
        if (prod[n] != 0) out.push_back({l, m, n, k});
    }
  return out;  // loop order is lexicographic
}

FusionVector ring_multiply(const FusionVector& u, const FusionVector& v) {
  if (!(u.level() == v.level()))
    throw std::domain_error("ring_multiply: level mismatch");
  const Level k = u.level();
  FusionVector out(k);
  for (std::int64_t l = 0; l <= k.value(); ++l) {
    if (u[l] == 0) continue;
    for (std::int64_t m = 0; m <= k.value(); ++m) {
      if (v[m] == 0) continue;
      const FusionVector prod = fusion_product(l, m, k);
      for (std::int64_t n = 0; n <= k.value(); ++n)
        out.at(n) += u[l] * v[m] * prod[n];
    }
  }
  return out;
}

double smatrix_entry(std::int64_t a, std::int64_t b, Level k) {
  const double kk = k.real();
  return std::sqrt(2.0 / (kk + 2.0)) *
         std::sin(std::numbers::pi * static_cast<double>(a + 1) *
                  static_cast<double>(b + 1) / (kk + 2.0));
}

VerlindeCoeff verlinde_coeff(std::int64_t lambda, std::int64_t mu, std::int64_t nu,
                             Level k) {
  require_weight(lambda, k, "verlinde_coeff");
  require_weight(mu, k, "verlinde_coeff");
  require_weight(nu, k, "verlinde_coeff");
  double raw = 0.0;
  for (std::int64_t s = 0; s <= k.value(); ++s)
    raw += smatrix_entry(lambda, s, k) * smatrix_entry(mu, s, k) *
           smatrix_entry(nu, s, k) / smatrix_entry(0, s, k);
  const auto rounded = static_cast<std::int64_t>(std::llround(raw));
  return {raw, rounded, std::abs(raw - static_cast<double>(rounded))};
}

TheoremReport verify_theorem(Level k, int interior_epsilon, int workers) {
  TheoremReport report;
  report.level = k.value();

  const std::int64_t kk = k.value();
  // per-lambda-row membership grids, identical for any worker count
  const auto rows = static_cast<std::size_t>(kk + 1);
  std::vector<std::vector<char>> in_v(rows), in_vg(rows);

  const auto run_row = [&](std::int64_t l) {
    auto& v_row = in_v[static_cast<std::size_t>(l)];
    auto& vg_row = in_vg[static_cast<std::size_t>(l)];
    v_row.assign(rows * rows, 0);
    vg_row.assign(rows * rows, 0);
    for (std::int64_t m = 0; m <= kk; ++m) {
      const FusionVector prod = fusion_product(l, m, k);
      for (std::int64_t n = 0; n <= kk; ++n) {
        const auto idx = static_cast<std::size_t>(m) * rows + static_cast<std::size_t>(n);
        v_row[idx] = prod[n] != 0 ? 1 : 0;
        vg_row[idx] =
            fusion_2iso_exists(IntWeightTriple{l, m, n, k}, interior_epsilon) ? 1 : 0;
      }
    }
  };

  const int nthreads = std::max(1, std::min<int>(workers, static_cast<int>(rows)));
  if (nthreads == 1) {
    for (std::int64_t l = 0; l <= kk; ++l) run_row(l);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int w = 0; w < nthreads; ++w)
      pool.emplace_back([&, w] {
        for (std::int64_t l = w; l <= kk; l += nthreads) run_row(l);
      });
    for (auto& th : pool) th.join();
  }

  for (std::int64_t l = 0; l <= kk; ++l)
    for (std::int64_t m = 0; m <= kk; ++m)
      for (std::int64_t n = 0; n <= kk; ++n) {
        const auto idx = static_cast<std::size_t>(m) * rows + static_cast<std::size_t>(n);
        const bool v = in_v[static_cast<std::size_t>(l)][idx] != 0;
        const bool vg = in_vg[static_cast<std::size_t>(l)][idx] != 0;
        if (v) ++report.v_size;
        if (vg) ++report.vg_size;
        if (v && !vg) report.v_only.push_back({l, m, n, k});
        if (vg && !v) report.vg_only.push_back({l, m, n, k});
      }
  report.verdict = report.v_only.empty() && report.vg_only.empty();
  return report;
}

}  // namespace fusion_gerbe
