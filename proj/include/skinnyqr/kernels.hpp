#pragma once

#include <cstddef>

namespace skinnyqr::kernels {

//! Data-parallel FP64 inner kernels. One scalar reference implementation plus
//! SIMD variants (AVX2 on x86-64, NEON on aarch64); the active table is
//! selected once at startup based on CPU support and can be overridden for
//! equivalence testing. All matrices are column-major with explicit leading
//! dimensions.
struct KernelTable {
  const char* name;

  //! C(i,j) += dot(W col i, W col j) for the upper triangle i <= j.
  void (*syrk_upper)(double* c, std::size_t ldc, const double* w, std::size_t ldw,
                     std::size_t rows, std::size_t cols);

  //! W <- W * R^{-1} in place; R upper triangular, inv_diag[j] = 1/R(j,j).
  void (*trsm_right_upper)(double* w, std::size_t ldw, std::size_t rows, std::size_t cols,
                           const double* r, std::size_t ldr, const double* inv_diag);

  //! OUT = W * B with B square cols x cols.
  void (*gemm_right)(double* out, std::size_t ldo, const double* w, std::size_t ldw,
                     std::size_t rows, std::size_t cols, const double* b, std::size_t ldb);

  double (*dot)(const double* a, const double* b, std::size_t len);

  //! y += alpha * x
  void (*axpy)(double* y, double alpha, const double* x, std::size_t len);

  void (*scal)(double* x, double alpha, std::size_t len);

  //! vx = dot(v, x), wx = dot(w, x) in one pass.
  void (*dot2)(const double* v, const double* w, const double* x, std::size_t len,
               double* vx, double* wx);

  //! x -= a*v + c*w
  void (*apply2)(double* x, const double* v, const double* w, double a, double c,
                 std::size_t len);

  //! Dots of v and w against four consecutive columns x, x+ldx, ...
  void (*pair_dots4)(const double* v, const double* w, const double* x, std::size_t ldx,
                     std::size_t len, double vx[4], double wx[4]);

  //! x_j -= a[j]*v + c[j]*w for the same four columns.
  void (*pair_update4)(double* x, std::size_t ldx, const double* v, const double* w,
                       const double a[4], const double c[4], std::size_t len);
};

const KernelTable& scalar_table();

//! Null when the build or the running CPU lacks the instruction set.
const KernelTable* avx2_table();
const KernelTable* neon_table();

//! Table used by the library kernels; defaults to the best supported variant.
const KernelTable& active();
void set_active(const KernelTable& table);

}  // namespace skinnyqr::kernels
