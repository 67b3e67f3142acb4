#include "fusion_gerbe/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace fusion_gerbe {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (const char c : s) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view check_name) {
  return splitmix64(master ^ fnv1a(check_name));
}

SU2Matrix haar_su2(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double q[4];
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& qi : q) {
      qi = gauss(rng);
      norm2 += qi * qi;
    }
  } while (norm2 < 1e-12);
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& qi : q) qi *= inv;
  // g = q0 + q1 i s1 + q2 i s2 + q3 i s3, a unit quaternion
  const Mat2 g{Complex(q[0], q[3]), Complex(q[2], q[1]), Complex(-q[2], q[1]),
               Complex(q[0], -q[3])};
  return SU2Matrix::from_matrix(g);
}

AlgebraElement random_algebra(Rng& rng, double scale) {
  std::normal_distribution<double> gauss(0.0, scale);
  return AlgebraElement::from_coefficients(gauss(rng), gauss(rng), gauss(rng));
}

WeightTriple random_triple_in_Fdot(Level k, Rng& rng, double margin) {
  std::uniform_real_distribution<double> uni(margin, k.real() - margin);
  for (int tries = 0; tries < 100000; ++tries) {
    const WeightTriple t{uni(rng), uni(rng), uni(rng), k};
    if (in_polytope(t)) return t;
  }
  throw std::runtime_error("random_triple_in_Fdot: rejection sampling failed");
}

WeightTriple random_face_triple(Face face, Level k, Rng& rng, double margin) {
  const double kk = k.real();
  if (kk <= 3.0 * margin)
    throw std::domain_error("random_face_triple: margin too large for this level");
  std::uniform_real_distribution<double> uni(margin, kk - margin);
  for (int tries = 0; tries < 100000; ++tries) {
    const double l = uni(rng);
    const double m = uni(rng);
    switch (face) {
      case Face::SumLower:
        if (l + m <= kk - margin) return {l, m, l + m, k};
        break;
      case Face::DiffLM:
        if (l - m >= margin) return {l, m, l - m, k};
        break;
      case Face::DiffML:
        if (m - l >= margin) return {l, m, m - l, k};
        break;
      case Face::SumUpper:
        if (l + m >= kk + margin) return {l, m, 2.0 * kk - l - m, k};
        break;
    }
  }
  throw std::runtime_error("random_face_triple: rejection sampling failed");
}

IntWeightTriple random_int_face_triple(Face face, Level k, Rng& rng) {
  const std::int64_t kk = k.value();
  if (kk < 4)
    throw std::domain_error("random_int_face_triple: needs level at least 4");
  std::uniform_int_distribution<std::int64_t> uni(1, kk - 1);
  for (int tries = 0; tries < 100000; ++tries) {
    const std::int64_t l = uni(rng);
    const std::int64_t m = uni(rng);
    switch (face) {
      case Face::SumLower:
        if (l + m <= kk - 1) return {l, m, l + m, k};
        break;
      case Face::DiffLM:
        if (l - m >= 1) return {l, m, l - m, k};
        break;
      case Face::DiffML:
        if (m - l >= 1) return {l, m, m - l, k};
        break;
      case Face::SumUpper:
        if (l + m >= kk + 1) return {l, m, 2 * kk - l - m, k};
        break;
    }
  }
  throw std::runtime_error("random_int_face_triple: rejection sampling failed");
}

}  // namespace fusion_gerbe
