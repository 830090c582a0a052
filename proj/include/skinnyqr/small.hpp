#pragma once

#include "skinnyqr/types.hpp"

namespace skinnyqr {

//! Host-side n x n helpers. None of these record traffic: operations on
//! small square matrices are outside the traffic model.

//! A * B for upper triangular factors (used for R2 * R1).
UpperTriangular triangular_multiply(const UpperTriangular& a, const UpperTriangular& b);

//! Dense n x n product.
DenseMatrix small_multiply(const DenseMatrix& a, const DenseMatrix& b);

//! Unblocked Householder QR of a small square/tall matrix, sign-normalized,
//! without counter recording.
UpperTriangular hhqr_small(const DenseMatrix& a);

//! 2-norm of a symmetric matrix = max |eigenvalue| (Jacobi).
double sym_two_norm(const GramMatrix& c);

}  // namespace skinnyqr
