#pragma once

#include <vector>

#include "skinnyqr/gram.hpp"
#include "skinnyqr/plan.hpp"
#include "skinnyqr/types.hpp"

namespace skinnyqr {

//! Symmetric eigendecomposition result, eigenvalues sorted descending.
struct EigenDecomp {
  std::size_t order = 0;
  std::vector<double> values;  // descending
  DenseMatrix vectors;         // n x n orthogonal U
};

//! SVQB-style Q-less factorization: X*B has orthonormal columns up to the
//! truncation rank; z satisfies X ~= (X*B)*z; singular_values from the first
//! pass; columns of X*B beyond rank are exactly zero.
struct QzResult {
  DenseMatrix transform;       // B
  DenseMatrix z;               // n x n
  std::vector<double> singular_values;
  std::size_t rank = 0;
};

struct SvqbPassResult {
  DenseMatrix b;
  DenseMatrix z;               // pseudo-inverse factor of b
  std::vector<double> sigma;
  std::size_t rank = 0;
};

//! Upper Cholesky R with R^T R = C. Throws BreakdownError (with the pivot
//! index) when a pivot falls to or below n * eps * max(diag(C)).
UpperTriangular cholesky(const GramMatrix& c);

//! Cyclic Jacobi diagonalization for n <= 128, run on the host worker.
//! Converges to off(C) <= 10*n*eps*||C||_F within max_sweeps = 30.
EigenDecomp eigh_small(const GramMatrix& c);

//! Q-less Cholesky-QR2: Gram, Cholesky, fused solve+Gram, Cholesky, R2*R1.
//! R has strictly positive diagonal for full-rank input. Propagates
//! BreakdownError when kappa exceeds the Gramian regime.
UpperTriangular cholqr2(const DenseMatrix& x, const PanelPlan& plan);

//! One SVQB pass on a caller-supplied Gram C = X^T X: pre-scale by
//! diag(C)^{-1/2}, eigendecompose, truncate eigenvalues below
//! 10*n*eps*lambda_max, B = D_s U Lambda^{-1/2} with truncated columns
//! exactly zero; sigma from the unscaled Gram spectrum.
SvqbPassResult svqb_pass(const DenseMatrix& x, const GramMatrix& c);

//! Two SVQB passes (Gram + fused multiply Gram); B = B1*B2, z composed as
//! the pseudo-inverse factors in reverse order.
QzResult svqb2(const DenseMatrix& x, const PanelPlan& plan);

//! Q = X R^{-1}, streamed panel-wise. Counters: reads m*n, writes m*n.
DenseMatrix reconstruct_q(const DenseMatrix& x, const UpperTriangular& r);

}  // namespace skinnyqr
