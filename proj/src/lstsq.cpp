#include "skinnyqr/lstsq.hpp"

#include <cmath>
#include <cstring>

#include "skinnyqr/gram_qr.hpp"
#include "skinnyqr/plan.hpp"
#include "skinnyqr/small.hpp"
#include "skinnyqr/tsqr.hpp"

namespace skinnyqr {

LstsqResult solve_lstsq(const DenseMatrix& a, const std::vector<double>& rhs,
                        LstsqMethod method) {
  const std::size_t m = a.rows(), n = a.cols();
  if (rhs.size() != m) throw DimensionError("solve_lstsq: rhs length != rows(A)");
  if (m < n + 1) throw DimensionError("solve_lstsq: need m >= n+1");
  validate_factorization_input(a, "solve_lstsq");
  for (double v : rhs)
    if (!std::isfinite(v)) throw ArgumentError("solve_lstsq: rhs contains non-finite values");

  // Extended matrix [A rhs], assembled once; plain copy, not recorded, so the
  // single-pass counters describe the factorization itself.
  DenseMatrix ext(m, n + 1);
  std::memcpy(ext.data(), a.data(), m * n * sizeof(double));
  std::memcpy(ext.col(n), rhs.data(), m * sizeof(double));

  UpperTriangular r;
  switch (method) {
    case LstsqMethod::tsqr:
      r = tsqr_qless(ext, default_tsqr_plan(m, n + 1));
      break;
    case LstsqMethod::cholqr2:
      r = cholqr2(ext, default_gram_plan(m, n + 1));
      break;
    case LstsqMethod::svqb2: {
      const QzResult qz = svqb2(ext, default_gram_plan(m, n + 1));
      // z is square but not triangular; a small in-memory QR makes it so.
      r = hhqr_small(qz.z);
      break;
    }
  }

  double max_diag = 0.0;
  for (std::size_t j = 0; j < n; ++j) max_diag = std::max(max_diag, std::abs(r(j, j)));
  const double dtol =
      static_cast<double>(n) * std::numeric_limits<double>::epsilon() * max_diag;

  LstsqResult out;
  out.x.resize(n);
  for (std::size_t ii = n; ii-- > 0;) {
    if (std::abs(r(ii, ii)) <= dtol)
      throw RankDeficiencyError("solve_lstsq: rank-deficient R at index " + std::to_string(ii),
                                ii);
    double s = r(ii, n);
    for (std::size_t j = ii + 1; j < n; ++j) s -= r(ii, j) * out.x[j];
    out.x[ii] = s / r(ii, ii);
  }
  out.residual_norm = std::abs(r(n, n));
  return out;
}

}  // namespace skinnyqr
