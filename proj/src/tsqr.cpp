#include "skinnyqr/tsqr.hpp"

#include <cmath>
#include <cstring>

#include "skinnyqr/counters.hpp"
#include "skinnyqr/kernels.hpp"
#include "skinnyqr/parallel.hpp"

namespace skinnyqr {

TrapezoidalWorkspace::TrapezoidalWorkspace(std::size_t panel_rows, std::size_t cols)
    : panel_rows_(panel_rows),
      cols_(cols),
      pencil_((panel_rows + cols) * cols, 0.0),
      v_buf_(panel_rows + cols, 0.0),
      w_buf_(panel_rows + cols, 0.0) {
  if (panel_rows < 1 || cols < 1)
    throw ArgumentError("TrapezoidalWorkspace: need panel_rows >= 1 and cols >= 1");
}

void TrapezoidalWorkspace::reset() {
  std::fill(pencil_.begin(), pencil_.end(), 0.0);
  active_rows_ = 0;
}

void TrapezoidalWorkspace::load_panel(const double* panel, std::size_t ld, std::size_t p) {
  if (p < 1 || p > panel_rows_) throw ArgumentError("load_panel: bad panel height");
  const std::size_t ldp = rows();
  for (std::size_t j = 0; j < cols_; ++j) {
    double* col_j = pencil_.data() + j * ldp;
    if (active_rows_ > 0) {
      // Move the running triangle from rows [0,n) to rows [p,p+n); walk
      // downward so overlapping ranges stay safe.
      for (std::size_t i = cols_; i-- > 0;) col_j[p + i] = col_j[i];
    }
    std::memcpy(col_j, panel + j * ld, p * sizeof(double));
  }
  active_rows_ = p;
}

namespace {

struct Reflector {
  double tau = 0.0;
};

// Builds the Householder reflector for column `col` over pencil rows
// [col, col+p]. vec gets v with v[col] = 1 (zeroed when the column tail is
// already zero); the pencil column is overwritten with (beta, 0, ..., 0).
Reflector make_reflector(double* column, double* vec, std::size_t col, std::size_t p,
                         const kernels::KernelTable& kt, std::uint64_t& flops) {
  const std::size_t lo = col;
  double* tail = column + lo + 1;
  const double sigma = kt.dot(tail, tail, p);
  flops += 2 * p;
  if (sigma == 0.0) {
    for (std::size_t i = 0; i <= p; ++i) vec[lo + i] = 0.0;
    return {0.0};
  }
  const double pivot = column[lo];
  const double norm = std::sqrt(pivot * pivot + sigma);
  const double beta = pivot > 0.0 ? -norm : norm;
  const double inv = 1.0 / (pivot - beta);
  vec[lo] = 1.0;
  for (std::size_t i = 0; i < p; ++i) vec[lo + 1 + i] = tail[i] * inv;
  column[lo] = beta;
  for (std::size_t i = 0; i < p; ++i) tail[i] = 0.0;
  flops += p + 6;
  return {(beta - pivot) / beta};
}

}  // namespace

std::uint64_t factor_trapezoidal(TrapezoidalWorkspace& ws) {
  const std::size_t n = ws.cols();
  const std::size_t p = ws.active_rows();
  if (p == 0) return 0;
  const std::size_t ld = ws.rows();
  double* v = ws.reflector_v();
  double* w = ws.reflector_w();
  const kernels::KernelTable& kt = kernels::active();
  std::uint64_t flops = 0;

  std::size_t i = 0;
  for (; i + 1 < n; i += 2) {
    const Reflector rv = make_reflector(ws.col(i), v, i, p, kt, flops);

    // Apply v to column i+1 before its own reflector is formed.
    if (rv.tau != 0.0) {
      double* next = ws.col(i + 1) + i;
      const double s = rv.tau * kt.dot(v + i, next, p + 1);
      kt.axpy(next, -s, v + i, p + 1);
      flops += 4 * (p + 1) + 1;
    }

    const Reflector rw = make_reflector(ws.col(i + 1), w, i + 1, p, kt, flops);

    if (i + 2 < n) {
      // Joint application of (v, w) over the union range [i, i+p+1].
      v[i + p + 1] = 0.0;
      w[i] = 0.0;
      const std::size_t len = p + 2;
      const double vtw = kt.dot(v + i, w + i, len);
      flops += 2 * len;

      std::size_t j = i + 2;
      double a[4], c[4], vx[4], wx[4];
      for (; j + 4 <= n; j += 4) {
        kt.pair_dots4(v + i, w + i, ws.col(j) + i, ld, len, vx, wx);
        for (int t = 0; t < 4; ++t) {
          a[t] = rv.tau * vx[t];
          c[t] = rw.tau * (wx[t] - a[t] * vtw);
        }
        kt.pair_update4(ws.col(j) + i, ld, v + i, w + i, a, c, len);
        flops += 4 * (8 * len + 4);
      }
      for (; j < n; ++j) {
        double vxs, wxs;
        kt.dot2(v + i, w + i, ws.col(j) + i, len, &vxs, &wxs);
        const double aj = rv.tau * vxs;
        const double cj = rw.tau * (wxs - aj * vtw);
        kt.apply2(ws.col(j) + i, v + i, w + i, aj, cj, len);
        flops += 8 * len + 4;
      }
    }
  }
  if (i < n) {
    // Odd tail: a single reflector with nothing left to update.
    make_reflector(ws.col(i), v, i, p, kt, flops);
  }
  return flops;
}

namespace {

UpperTriangular block_qless_qr_core(const double* x, std::size_t ld, std::size_t rows,
                                    std::size_t n, std::size_t b, bool record) {
  UpperTriangular r(n);
  std::uint64_t actual = 0;
  if (rows > 0) {
    TrapezoidalWorkspace ws(b, n);
    for (std::size_t off = 0; off < rows; off += b) {
      const std::size_t p = std::min(b, rows - off);
      ws.load_panel(x + off, ld, p);
      actual += factor_trapezoidal(ws);
    }
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i <= j; ++i) r(i, j) = ws.at(i, j);
  }
  if (record) {
    const std::uint64_t panels = (rows + b - 1) / b;
    counters().record_reads(static_cast<std::uint64_t>(rows) * n);
    counters().record_flops(panels * 2 * (b + 1) * n * n);
    counters().record_actual_flops(actual);
  }
  return r;
}

}  // namespace

UpperTriangular block_qless_qr(const DenseMatrix& xi, std::size_t b) {
  if (b < 1) throw ArgumentError("block_qless_qr: b must be >= 1");
  if (xi.cols() < 1) throw ArgumentError("block_qless_qr: need at least one column");
  return block_qless_qr_core(xi.data(), xi.rows(), xi.rows(), xi.cols(), b, true);
}

DenseMatrix tsqr_stage1(const DenseMatrix& x, const PanelPlan& plan) {
  plan.validate();
  const std::size_t m = x.rows(), n = x.cols();
  const std::size_t k = plan.num_blocks;
  const std::size_t b = plan.panel_rows;

  DenseMatrix y(k * n, n);
  parallel_for(k, [&](std::size_t block) {
    const std::size_t begin = plan.block_begin(m, block);
    const std::size_t end = plan.block_end(m, block);
    const UpperTriangular r =
        block_qless_qr_core(x.data() + begin, m, end - begin, n, b, true);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i <= j; ++i) y(block * n + i, j) = r(i, j);
  });
  return y;
}

UpperTriangular tsqr_qless(const DenseMatrix& x, const PanelPlan& plan) {
  validate_factorization_input(x, "tsqr_qless");
  if (x.cols() > 64) throw ArgumentError("tsqr_qless: supports up to 64 columns");

  const DenseMatrix y = tsqr_stage1(x, plan);
  // Stage 2 factors the k*n x n stack in a single block; Y traffic stays
  // outside the counters.
  UpperTriangular r = block_qless_qr_core(y.data(), y.rows(), y.rows(), x.cols(),
                                          plan.panel_rows, false);
  sign_normalize(r);
  return r;
}

UpperTriangular reference_hhqr(const DenseMatrix& x) {
  validate_factorization_input(x, "reference_hhqr");
  const std::size_t m = x.rows(), n = x.cols();
  std::vector<double> work(x.data(), x.data() + m * n);
  const kernels::KernelTable& kt = kernels::active();
  std::uint64_t actual = 0;

  for (std::size_t j = 0; j < n; ++j) {
    double* cj = work.data() + j * m;
    const std::size_t tail = m - j - 1;
    const double sigma = kt.dot(cj + j + 1, cj + j + 1, tail);
    actual += 2 * tail;
    if (sigma == 0.0) continue;
    const double pivot = cj[j];
    const double norm = std::sqrt(pivot * pivot + sigma);
    const double beta = pivot > 0.0 ? -norm : norm;
    const double tau = (beta - pivot) / beta;
    const double inv = 1.0 / (pivot - beta);
    kt.scal(cj + j + 1, inv, tail);
    cj[j] = beta;
    actual += tail + 6;
    for (std::size_t jj = j + 1; jj < n; ++jj) {
      double* c = work.data() + jj * m;
      const double s = tau * (c[j] + kt.dot(cj + j + 1, c + j + 1, tail));
      c[j] -= s;
      kt.axpy(c + j + 1, -s, cj + j + 1, tail);
      actual += 4 * tail + 4;
    }
  }

  UpperTriangular r(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= j; ++i) r(i, j) = work[j * m + i];
  sign_normalize(r);

  const std::uint64_t mm = m, nn = n;
  counters().record_reads(mm * nn);
  counters().record_writes(mm * nn);
  counters().record_flops(2 * mm * nn * nn);
  counters().record_actual_flops(actual);
  return r;
}

}  // namespace skinnyqr
