#include "skinnyqr/small.hpp"

#include <cmath>

#include "skinnyqr/gram_qr.hpp"

namespace skinnyqr {

UpperTriangular triangular_multiply(const UpperTriangular& a, const UpperTriangular& b) {
  const std::size_t n = a.order();
  if (b.order() != n) throw DimensionError("triangular_multiply: order mismatch");
  UpperTriangular out(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      double s = 0.0;
      for (std::size_t k = i; k <= j; ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

DenseMatrix small_multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("small_multiply: shape mismatch");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double bkj = b(k, j);
      if (bkj == 0.0) continue;
      for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) += a(i, k) * bkj;
    }
  return out;
}

UpperTriangular hhqr_small(const DenseMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m < n) throw DimensionError("hhqr_small: need rows >= cols");
  std::vector<double> work(a.data(), a.data() + m * n);
  for (std::size_t j = 0; j < n; ++j) {
    double* cj = work.data() + j * m;
    double sigma = 0.0;
    for (std::size_t i = j + 1; i < m; ++i) sigma += cj[i] * cj[i];
    if (sigma == 0.0) continue;
    const double pivot = cj[j];
    const double norm = std::sqrt(pivot * pivot + sigma);
    const double beta = pivot > 0.0 ? -norm : norm;
    const double tau = (beta - pivot) / beta;
    const double inv = 1.0 / (pivot - beta);
    for (std::size_t i = j + 1; i < m; ++i) cj[i] *= inv;
    cj[j] = beta;
    for (std::size_t jj = j + 1; jj < n; ++jj) {
      double* c = work.data() + jj * m;
      double s = c[j];
      for (std::size_t i = j + 1; i < m; ++i) s += cj[i] * c[i];
      s *= tau;
      c[j] -= s;
      for (std::size_t i = j + 1; i < m; ++i) c[i] -= s * cj[i];
    }
  }
  UpperTriangular r(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= j; ++i) r(i, j) = work[j * m + i];
  sign_normalize(r);
  return r;
}

double sym_two_norm(const GramMatrix& c) {
  if (c.order() == 0) return 0.0;
  const EigenDecomp e = eigh_small(c);
  return std::max(std::abs(e.values.front()), std::abs(e.values.back()));
}

}  // namespace skinnyqr
