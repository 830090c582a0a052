#pragma once

#include <cstddef>
#include <vector>

#include "skinnyqr/plan.hpp"
#include "skinnyqr/types.hpp"

namespace skinnyqr {

//! In-place workspace for the trapezoidal Householder kernel: a stacked
//! [W; R] pencil of (b+n) x n with R upper triangular at the bottom, plus
//! two reflector buffers. After factor_trapezoidal the top n x n of the
//! pencil is the new upper triangle.
class TrapezoidalWorkspace {
 public:
  TrapezoidalWorkspace(std::size_t panel_rows, std::size_t cols);

  std::size_t panel_rows() const { return panel_rows_; }  // b
  std::size_t cols() const { return cols_; }              // n
  std::size_t rows() const { return panel_rows_ + cols_; }

  double* col(std::size_t j) { return pencil_.data() + j * rows(); }
  const double* col(std::size_t j) const { return pencil_.data() + j * rows(); }
  double& at(std::size_t i, std::size_t j) { return pencil_[j * rows() + i]; }
  double at(std::size_t i, std::size_t j) const { return pencil_[j * rows() + i]; }

  //! Rows of the current W part; the running triangle sits right below it.
  std::size_t active_rows() const { return active_rows_; }

  //! Zero the triangle part and mark the pencil empty.
  void reset();

  //! Load a p-row panel (p <= b) into the W part, moving the running
  //! triangle down so it sits at rows [p, p+n).
  void load_panel(const double* panel, std::size_t ld, std::size_t p);

  double* reflector_v() { return v_buf_.data(); }
  double* reflector_w() { return w_buf_.data(); }

 private:
  std::size_t panel_rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t active_rows_ = 0;
  std::vector<double> pencil_;
  std::vector<double> v_buf_;
  std::vector<double> w_buf_;
};

//! In-place trapezoidal HHQR of the pencil: columns are processed in pairs,
//! the two reflectors applied jointly to trailing columns in groups of four;
//! odd n falls back to a single-column tail. Zero columns produce zero
//! reflectors and an exact zero diagonal entry. Returns executed flops.
std::uint64_t factor_trapezoidal(TrapezoidalWorkspace& ws);

//! Q-less QR of one row block, streamed in b-row panels through
//! factor_trapezoidal with the running R fused in. Counters: reads rows*n,
//! flops ceil(rows/b) * 2*(b+1)*n^2 (the model count).
UpperTriangular block_qless_qr(const DenseMatrix& xi, std::size_t b);

//! Two-stage Q-less Householder TSQR: k parallel block factorizations
//! produce Y (k*n x n), one further block factorization of Y gives R,
//! sign-normalized. Reads of X are counted exactly once (m*n); Y traffic is
//! not counted.
UpperTriangular tsqr_qless(const DenseMatrix& x, const PanelPlan& plan);

//! Stage 1 only: the stacked block triangles Y (k*n x n). Exposed for tests.
DenseMatrix tsqr_stage1(const DenseMatrix& x, const PanelPlan& plan);

//! Classical unblocked Householder QR over the full matrix, sign-normalized.
//! The oracle/baseline for the factorizations above. Counters: reads m*n,
//! writes m*n (the factored matrix holds Q in implicit form), flops 2*m*n^2.
UpperTriangular reference_hhqr(const DenseMatrix& x);

}  // namespace skinnyqr
