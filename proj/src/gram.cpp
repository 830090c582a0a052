#include "skinnyqr/gram.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <mutex>
#include <vector>

#include "skinnyqr/counters.hpp"
#include "skinnyqr/kernels.hpp"
#include "skinnyqr/parallel.hpp"

namespace skinnyqr {
namespace {

enum class PanelOp { plain, solve, multiply };

// Parallel map over k row blocks, each accumulating a private partial Gram
// from b-row panels; fused kernels transform the panel in a cache-resident
// workspace first. Deterministic plans combine partials in ascending block
// order; otherwise blocks merge eagerly in completion order (sums within a
// block are never reordered).
GramMatrix blocked_gram(const DenseMatrix& x, const PanelPlan& plan, PanelOp op,
                        const double* factor, const double* inv_diag) {
  plan.validate();
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  const std::size_t k = plan.num_blocks;
  const std::size_t b = plan.panel_rows;

  std::vector<std::vector<double>> partials;
  std::vector<double> shared;
  std::mutex shared_mutex;
  if (plan.deterministic)
    partials.assign(k, {});
  else
    shared.assign(n * n, 0.0);

  parallel_for(k, [&](std::size_t block) {
    const std::size_t begin = plan.block_begin(m, block);
    const std::size_t end = plan.block_end(m, block);
    if (begin >= end) return;

    std::vector<double> local(n * n, 0.0);
    std::vector<double> ws_in, ws_out;
    if (op != PanelOp::plain) ws_in.resize(b * n);
    if (op == PanelOp::multiply) ws_out.resize(b * n);
    const kernels::KernelTable& kt = kernels::active();

    for (std::size_t off = begin; off < end; off += b) {
      const std::size_t p = std::min(b, end - off);
      const double* panel = x.data() + off;
      switch (op) {
        case PanelOp::plain:
          kt.syrk_upper(local.data(), n, panel, m, p, n);
          break;
        case PanelOp::solve:
          for (std::size_t j = 0; j < n; ++j)
            std::memcpy(ws_in.data() + j * p, panel + j * m, p * sizeof(double));
          kt.trsm_right_upper(ws_in.data(), p, p, n, factor, n, inv_diag);
          kt.syrk_upper(local.data(), n, ws_in.data(), p, p, n);
          break;
        case PanelOp::multiply:
          for (std::size_t j = 0; j < n; ++j)
            std::memcpy(ws_in.data() + j * p, panel + j * m, p * sizeof(double));
          kt.gemm_right(ws_out.data(), p, ws_in.data(), p, p, n, factor, n);
          kt.syrk_upper(local.data(), n, ws_out.data(), p, p, n);
          break;
      }
    }

    if (plan.deterministic) {
      partials[block] = std::move(local);
    } else {
      std::lock_guard<std::mutex> lock(shared_mutex);
      for (std::size_t i = 0; i < n * n; ++i) shared[i] += local[i];
    }
  });

  GramMatrix c(n);
  if (plan.deterministic) {
    for (std::size_t block = 0; block < k; ++block) {
      if (partials[block].empty()) continue;
      const double* part = partials[block].data();
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= j; ++i) c(i, j) += part[j * n + i];
    }
  } else {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i <= j; ++i) c(i, j) = shared[j * n + i];
  }
  c.mirror_upper();
  return c;
}

void check_finite(const DenseMatrix& x, const char* op) {
  const double* p = x.data();
  const std::size_t total = x.rows() * x.cols();
  for (std::size_t i = 0; i < total; ++i)
    if (!std::isfinite(p[i]))
      throw ArgumentError(std::string(op) + ": non-finite input");
}

}  // namespace

double trsm_diag_tolerance(const UpperTriangular& r) {
  const std::size_t n = r.order();
  double max_diag = 0.0;
  for (std::size_t j = 0; j < n; ++j) max_diag = std::max(max_diag, std::abs(r(j, j)));
  return static_cast<double>(n) * std::numeric_limits<double>::epsilon() * max_diag;
}

GramMatrix tsmttsm(const DenseMatrix& x, const PanelPlan& plan) {
  check_finite(x, "tsmttsm");
  const std::uint64_t m = x.rows(), n = x.cols();
  GramMatrix c = blocked_gram(x, plan, PanelOp::plain, nullptr, nullptr);
  counters().record_reads(m * n);
  counters().record_flops(2 * m * n * n);
  counters().record_actual_flops(m * n * (n + 1));
  return c;
}

GramMatrix tsmRttsmR(const DenseMatrix& x, const UpperTriangular& r, const PanelPlan& plan) {
  const std::uint64_t m = x.rows(), n = x.cols();
  if (r.order() != n) throw DimensionError("tsmRttsmR: R order != cols(X)");
  const double dtol = trsm_diag_tolerance(r);
  std::vector<double> inv_diag(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(r(j, j)) <= dtol)
      throw SingularFactorError("tsmRttsmR: R diagonal below tolerance at index " +
                                    std::to_string(j),
                                j);
    inv_diag[j] = 1.0 / r(j, j);
  }
  GramMatrix c = blocked_gram(x, plan, PanelOp::solve, r.data(), inv_diag.data());
  counters().record_reads(m * n);
  counters().record_flops(3 * m * n * n);
  counters().record_actual_flops(m * n * n + m * n * (n + 1));
  return c;
}

GramMatrix tsmmttsmm(const DenseMatrix& x, const DenseMatrix& b, const PanelPlan& plan) {
  const std::uint64_t m = x.rows(), n = x.cols();
  if (b.rows() != n || b.cols() != n) throw DimensionError("tsmmttsmm: B must be n x n");
  check_finite(b, "tsmmttsmm");
  GramMatrix c = blocked_gram(x, plan, PanelOp::multiply, b.data(), nullptr);
  counters().record_reads(m * n);
  counters().record_flops(4 * m * n * n);
  counters().record_actual_flops(2 * m * n * n + m * n * (n + 1));
  return c;
}

}  // namespace skinnyqr
