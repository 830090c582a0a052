#include "skinnyqr/types.hpp"

#include <cmath>
#include <string>

namespace skinnyqr {

void sign_normalize(UpperTriangular& r) {
  const std::size_t n = r.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (r(i, i) < 0.0)
      for (std::size_t j = i; j < n; ++j) r(i, j) = -r(i, j);
  }
}

double frobenius_norm(const DenseMatrix& x) {
  // Blocked pairwise accumulation: sum 256-element blocks, then combine the
  // block sums pairwise. Keeps relative error O(eps log m).
  const double* p = x.data();
  const std::size_t total = x.rows() * x.cols();
  constexpr std::size_t kBlock = 256;

  std::vector<double> partials;
  partials.reserve(total / kBlock + 1);
  for (std::size_t off = 0; off < total; off += kBlock) {
    const std::size_t end = std::min(off + kBlock, total);
    double s = 0.0;
    for (std::size_t i = off; i < end; ++i) s += p[i] * p[i];
    partials.push_back(s);
  }
  while (partials.size() > 1) {
    std::size_t half = (partials.size() + 1) / 2;
    for (std::size_t i = 0; i + half < partials.size(); ++i)
      partials[i] += partials[i + half];
    partials.resize(half);
  }
  return partials.empty() ? 0.0 : std::sqrt(partials[0]);
}

void validate_factorization_input(const DenseMatrix& x, const char* op) {
  if (x.cols() < 1 || x.rows() < x.cols())
    throw DimensionError(std::string(op) + ": input must be tall-skinny (rows >= cols >= 1)");
  const double* p = x.data();
  const std::size_t total = x.rows() * x.cols();
  for (std::size_t i = 0; i < total; ++i)
    if (!std::isfinite(p[i]))
      throw ArgumentError(std::string(op) + ": input contains non-finite values");
}

}  // namespace skinnyqr
