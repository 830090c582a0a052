#include "skinnyqr/matgen.hpp"

#include <cmath>
#include <vector>

namespace skinnyqr {

std::uint64_t mix64(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(mix64(seed, index) >> 11) * 0x1.0p-53;
}

namespace {

// V's reflector stream starts at 2^63 so it never collides with U's, which
// uses indices [0, n*m).
constexpr std::uint64_t kVStreamBase = 1ULL << 63;

double symmetric_unit(std::uint64_t seed, std::uint64_t index) {
  return 2.0 * uniform01(seed, index) - 1.0;
}

// A <- H_0 H_1 ... H_{nref-1} A with H_j = I - (2/v^T v) v v^T and v drawn
// from the (seed, base + j*len ...) stream. Reflectors are exactly
// orthogonal, so orthonormal columns stay orthonormal up to rounding.
void apply_random_reflectors(std::vector<double>& a, std::size_t len, std::size_t ncols,
                             std::uint64_t seed, std::uint64_t base, std::size_t nref) {
  std::vector<double> v(len), w(ncols);
  for (std::size_t jr = nref; jr-- > 0;) {
    double vv = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      v[i] = symmetric_unit(seed, base + jr * len + i);
      vv += v[i] * v[i];
    }
    if (vv == 0.0) continue;
    const double scale = 2.0 / vv;
    for (std::size_t j = 0; j < ncols; ++j) {
      double s = 0.0;
      const double* col = a.data() + j * len;
      for (std::size_t i = 0; i < len; ++i) s += v[i] * col[i];
      w[j] = scale * s;
    }
    for (std::size_t j = 0; j < ncols; ++j) {
      double* col = a.data() + j * len;
      for (std::size_t i = 0; i < len; ++i) col[i] -= v[i] * w[j];
    }
  }
}

std::vector<double> singular_values(std::size_t n, const SpectrumSpec& spec) {
  std::vector<double> sigma(n);
  if (n == 1) {
    sigma[0] = 1.0;
    return sigma;
  }
  if (spec.decay == SpectrumDecay::geometric) {
    for (std::size_t i = 0; i < n; ++i)
      sigma[i] = std::pow(spec.kappa, -static_cast<double>(i) / static_cast<double>(n - 1));
  } else {
    const double lo = 1.0 / spec.kappa;
    for (std::size_t i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(n - 1);
      sigma[i] = 1.0 + t * (lo - 1.0);
    }
  }
  return sigma;
}

}  // namespace

DenseMatrix generate(std::size_t m, std::size_t n, const SpectrumSpec& spec) {
  if (n < 1 || m < n) throw ArgumentError("generate: need m >= n >= 1");
  if (spec.kappa < 1.0) throw ArgumentError("generate: kappa must be >= 1");
  if (n == 1 && spec.kappa != 1.0)
    throw ArgumentError("generate: n = 1 forces kappa = 1");

  const std::vector<double> sigma = singular_values(n, spec);

  // U = reflectors applied to the first n columns of I_m, then scaled by sigma.
  std::vector<double> u(m * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) u[j * m + j] = 1.0;
  apply_random_reflectors(u, m, n, spec.seed, 0, n);
  for (std::size_t j = 0; j < n; ++j) {
    double* col = u.data() + j * m;
    for (std::size_t i = 0; i < m; ++i) col[i] *= sigma[j];
  }

  std::vector<double> v(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) v[j * n + j] = 1.0;
  apply_random_reflectors(v, n, n, spec.seed, kVStreamBase, n);

  // X = (U Sigma) V^T, column j accumulated as sum_k (U Sigma)_k * V(j,k).
  DenseMatrix x(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    double* xj = x.col(j);
    for (std::size_t k = 0; k < n; ++k) {
      const double vjk = v[k * n + j];
      const double* uk = u.data() + k * m;
      for (std::size_t i = 0; i < m; ++i) xj[i] += vjk * uk[i];
    }
  }
  return x;
}

}  // namespace skinnyqr
