#pragma once

#include "skinnyqr/plan.hpp"
#include "skinnyqr/types.hpp"

namespace skinnyqr {

//! C = X^T X as a parallel blocked reduction over row panels.
//! Counters: large_reads = m*n, large_writes = 0, flops = 2*m*n^2 (the model
//! count; executed flops land in the secondary counter). Partial Gram
//! matrices are combined in ascending block order.
GramMatrix tsmttsm(const DenseMatrix& x, const PanelPlan& plan);

//! C = (X R^{-1})^T (X R^{-1}); each streamed b x n panel is solved against R
//! in a workspace before the rank-b update, so the m x n intermediate is
//! never materialized. Counters: reads m*n, flops 3*m*n^2.
GramMatrix tsmRttsmR(const DenseMatrix& x, const UpperTriangular& r, const PanelPlan& plan);

//! C = (X B)^T (X B) with B square n x n, fused the same way.
//! Counters: reads m*n, flops 4*m*n^2.
GramMatrix tsmmttsmm(const DenseMatrix& x, const DenseMatrix& b, const PanelPlan& plan);

//! Singularity tolerance for triangular solves: n * eps * max|diag(R)|.
double trsm_diag_tolerance(const UpperTriangular& r);

}  // namespace skinnyqr
