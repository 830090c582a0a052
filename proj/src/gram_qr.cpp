#include "skinnyqr/gram_qr.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>

#include "skinnyqr/counters.hpp"
#include "skinnyqr/kernels.hpp"
#include "skinnyqr/small.hpp"

namespace skinnyqr {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double off_diagonal_norm(const GramMatrix& a) {
  const std::size_t n = a.order();
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) s += a(i, j) * a(i, j);
  return std::sqrt(2.0 * s);
}

double frob(const GramMatrix& a) {
  const std::size_t n = a.order();
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

UpperTriangular cholesky(const GramMatrix& c) {
  const std::size_t n = c.order();
  UpperTriangular r(n);
  double c_max = 0.0;
  for (std::size_t j = 0; j < n; ++j) c_max = std::max(c_max, std::abs(c(j, j)));
  const double pivot_tol = static_cast<double>(n) * kEps * c_max;

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      double s = c(i, j);
      for (std::size_t k = 0; k < i; ++k) s -= r(k, i) * r(k, j);
      r(i, j) = s / r(i, i);
    }
    double d = c(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= r(k, j) * r(k, j);
    if (d <= pivot_tol)
      throw BreakdownError("cholesky: non-positive pivot at index " + std::to_string(j) +
                               "; condition number too large, use SVQB2 or TSQR",
                           j);
    r(j, j) = std::sqrt(d);
  }
  return r;
}

EigenDecomp eigh_small(const GramMatrix& c) {
  const std::size_t n = c.order();
  if (n > 128) throw ArgumentError("eigh_small: order must be <= 128");

  GramMatrix a = c;
  DenseMatrix u(n, n);
  for (std::size_t j = 0; j < n; ++j) u(j, j) = 1.0;

  const double threshold = 10.0 * static_cast<double>(n) * kEps * frob(c);
  constexpr int kMaxSweeps = 30;

  bool converged = off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p), aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;

        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a(i, p), aiq = a(i, q);
          a(i, p) = cs * aip - sn * aiq;
          a(i, q) = sn * aip + cs * aiq;
          a(p, i) = a(i, p);
          a(q, i) = a(i, q);
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double uip = u(i, p), uiq = u(i, q);
          u(i, p) = cs * uip - sn * uiq;
          u(i, q) = sn * uip + cs * uiq;
        }
      }
    }
    converged = off_diagonal_norm(a) <= threshold;
  }
  if (!converged) throw Error("eigh_small: no convergence after 30 sweeps");

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  EigenDecomp e;
  e.order = n;
  e.values.resize(n);
  e.vectors = DenseMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    e.values[j] = a(perm[j], perm[j]);
    std::memcpy(e.vectors.col(j), u.col(perm[j]), n * sizeof(double));
  }
  return e;
}

UpperTriangular cholqr2(const DenseMatrix& x, const PanelPlan& plan) {
  validate_factorization_input(x, "cholqr2");
  const GramMatrix c1 = tsmttsm(x, plan);
  const UpperTriangular r1 = cholesky(c1);
  const GramMatrix c2 = tsmRttsmR(x, r1, plan);
  const UpperTriangular r2 = cholesky(c2);
  // R = R2 * R1 is n x n work, not recorded.
  return triangular_multiply(r2, r1);
}

SvqbPassResult svqb_pass(const DenseMatrix& x, const GramMatrix& c) {
  const std::size_t n = c.order();
  if (x.cols() != n) throw DimensionError("svqb_pass: C order != cols(X)");

  // SVQB column pre-scaling D_s = diag(C)^{-1/2}; unit scale for zero columns.
  std::vector<double> ds(n), ds_inv(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double d = c(j, j);
    ds[j] = d > 0.0 ? 1.0 / std::sqrt(d) : 1.0;
    ds_inv[j] = d > 0.0 ? std::sqrt(d) : 1.0;
  }
  GramMatrix cs(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) cs(i, j) = c(i, j) * ds[i] * ds[j];

  const EigenDecomp es = eigh_small(cs);
  const double lambda_max = es.values[0];
  if (!(lambda_max > 0.0)) throw ZeroMatrixError("svqb_pass: input is numerically zero");

  const double trunc_tol = 10.0 * static_cast<double>(n) * kEps;
  std::size_t rank = 0;
  while (rank < n && es.values[rank] >= trunc_tol * lambda_max) ++rank;
  if (rank == 0) throw ZeroMatrixError("svqb_pass: all eigenvalues truncated");

  SvqbPassResult out;
  out.rank = rank;
  out.b = DenseMatrix(n, n);
  out.z = DenseMatrix(n, n);
  for (std::size_t j = 0; j < rank; ++j) {
    const double inv_sqrt = 1.0 / std::sqrt(es.values[j]);
    const double sqrt_l = std::sqrt(es.values[j]);
    for (std::size_t i = 0; i < n; ++i) {
      out.b(i, j) = ds[i] * es.vectors(i, j) * inv_sqrt;
      out.z(j, i) = sqrt_l * es.vectors(i, j) * ds_inv[i];
    }
  }
  // Truncated directions stay exactly zero in both factors.

  const EigenDecomp eu = eigh_small(c);
  out.sigma.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    out.sigma[j] = std::sqrt(std::max(eu.values[j], 0.0));
  return out;
}

QzResult svqb2(const DenseMatrix& x, const PanelPlan& plan) {
  validate_factorization_input(x, "svqb2");
  const GramMatrix c1 = tsmttsm(x, plan);
  SvqbPassResult p1 = svqb_pass(x, c1);
  const GramMatrix c2 = tsmmttsmm(x, p1.b, plan);
  SvqbPassResult p2 = svqb_pass(x, c2);

  QzResult out;
  out.transform = small_multiply(p1.b, p2.b);
  out.z = small_multiply(p2.z, p1.z);
  out.singular_values = std::move(p1.sigma);
  out.rank = p2.rank;
  return out;
}

DenseMatrix reconstruct_q(const DenseMatrix& x, const UpperTriangular& r) {
  const std::size_t m = x.rows(), n = x.cols();
  if (r.order() != n) throw DimensionError("reconstruct_q: R order != cols(X)");
  const double dtol = trsm_diag_tolerance(r);
  std::vector<double> inv_diag(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(r(j, j)) <= dtol)
      throw SingularFactorError("reconstruct_q: R diagonal below tolerance at index " +
                                    std::to_string(j),
                                j);
    inv_diag[j] = 1.0 / r(j, j);
  }

  DenseMatrix q(m, n);
  const std::size_t b = std::max<std::size_t>(n, 32 * 1024 / (8 * n));
  const kernels::KernelTable& kt = kernels::active();
  for (std::size_t off = 0; off < m; off += b) {
    const std::size_t p = std::min(b, m - off);
    for (std::size_t j = 0; j < n; ++j)
      std::memcpy(q.col(j) + off, x.col(j) + off, p * sizeof(double));
    kt.trsm_right_upper(q.data() + off, m, p, n, r.data(), n, inv_diag.data());
  }
  const std::uint64_t mm = m, nn = n;
  counters().record_reads(mm * nn);
  counters().record_writes(mm * nn);
  counters().record_flops(mm * nn * nn);
  counters().record_actual_flops(mm * nn * nn);
  return q;
}

}  // namespace skinnyqr
