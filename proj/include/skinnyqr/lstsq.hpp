#pragma once

#include <vector>

#include "skinnyqr/types.hpp"

namespace skinnyqr {

enum class LstsqMethod { tsqr, cholqr2, svqb2 };

struct LstsqResult {
  std::vector<double> x;
  double residual_norm = 0.0;
};

//! min_x ||A x - rhs||_2 via Q-less QR of the extended matrix [A rhs]:
//! back-substitution on the leading n x n of R, residual_norm = |R(n,n)|.
//! With method = tsqr the factorization streams A exactly once
//! (large_reads = m*(n+1)); the extended-matrix assembly is an uncounted
//! plain copy. Throws RankDeficiencyError on a near-zero diagonal.
LstsqResult solve_lstsq(const DenseMatrix& a, const std::vector<double>& rhs,
                        LstsqMethod method);

}  // namespace skinnyqr
