#if defined(__aarch64__)

#include <arm_neon.h>

#include "skinnyqr/kernels.hpp"

namespace skinnyqr::kernels {
namespace {

double dot_neon(const double* a, const double* b, std::size_t len) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double s = vaddvq_f64(acc0) + vaddvq_f64(acc1);
  for (; i < len; ++i) s += a[i] * b[i];
  return s;
}

void syrk_upper_neon(double* c, std::size_t ldc, const double* w, std::size_t ldw,
                     std::size_t rows, std::size_t cols) {
  for (std::size_t j = 0; j < cols; ++j) {
    const double* wj = w + j * ldw;
    for (std::size_t i = 0; i <= j; ++i)
      c[j * ldc + i] += dot_neon(w + i * ldw, wj, rows);
  }
}

void axpy_neon(double* y, double alpha, const double* x, std::size_t len) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2)
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < len; ++i) y[i] += alpha * x[i];
}

void scal_neon(double* x, double alpha, std::size_t len) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  for (; i < len; ++i) x[i] *= alpha;
}

void trsm_right_upper_neon(double* w, std::size_t ldw, std::size_t rows, std::size_t cols,
                           const double* r, std::size_t ldr, const double* inv_diag) {
  for (std::size_t j = 0; j < cols; ++j) {
    double* wj = w + j * ldw;
    for (std::size_t i = 0; i < j; ++i) {
      const double rij = r[j * ldr + i];
      if (rij == 0.0) continue;
      axpy_neon(wj, -rij, w + i * ldw, rows);
    }
    scal_neon(wj, inv_diag[j], rows);
  }
}

void gemm_right_neon(double* out, std::size_t ldo, const double* w, std::size_t ldw,
                     std::size_t rows, std::size_t cols, const double* b, std::size_t ldb) {
  for (std::size_t j = 0; j < cols; ++j) {
    double* oj = out + j * ldo;
    for (std::size_t k = 0; k < rows; ++k) oj[k] = 0.0;
    for (std::size_t i = 0; i < cols; ++i) {
      const double bij = b[j * ldb + i];
      if (bij == 0.0) continue;
      axpy_neon(oj, bij, w + i * ldw, rows);
    }
  }
}

void dot2_neon(const double* v, const double* w, const double* x, std::size_t len,
               double* vx, double* wx) {
  float64x2_t av = vdupq_n_f64(0.0);
  float64x2_t aw = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const float64x2_t xv = vld1q_f64(x + i);
    av = vfmaq_f64(av, vld1q_f64(v + i), xv);
    aw = vfmaq_f64(aw, vld1q_f64(w + i), xv);
  }
  double sv = vaddvq_f64(av), sw = vaddvq_f64(aw);
  for (; i < len; ++i) {
    sv += v[i] * x[i];
    sw += w[i] * x[i];
  }
  *vx = sv;
  *wx = sw;
}

void apply2_neon(double* x, const double* v, const double* w, double a, double c,
                 std::size_t len) {
  const float64x2_t va = vdupq_n_f64(a);
  const float64x2_t vc = vdupq_n_f64(c);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    float64x2_t xv = vld1q_f64(x + i);
    xv = vfmsq_f64(xv, va, vld1q_f64(v + i));
    xv = vfmsq_f64(xv, vc, vld1q_f64(w + i));
    vst1q_f64(x + i, xv);
  }
  for (; i < len; ++i) x[i] -= a * v[i] + c * w[i];
}

void pair_dots4_neon(const double* v, const double* w, const double* x, std::size_t ldx,
                     std::size_t len, double vx[4], double wx[4]) {
  for (int j = 0; j < 4; ++j)
    dot2_neon(v, w, x + static_cast<std::size_t>(j) * ldx, len, &vx[j], &wx[j]);
}

void pair_update4_neon(double* x, std::size_t ldx, const double* v, const double* w,
                       const double a[4], const double c[4], std::size_t len) {
  for (int j = 0; j < 4; ++j)
    apply2_neon(x + static_cast<std::size_t>(j) * ldx, v, w, a[j], c[j], len);
}

const KernelTable kNeon = {
    "neon",
    syrk_upper_neon,
    trsm_right_upper_neon,
    gemm_right_neon,
    dot_neon,
    axpy_neon,
    scal_neon,
    dot2_neon,
    apply2_neon,
    pair_dots4_neon,
    pair_update4_neon,
};

}  // namespace

const KernelTable* neon_table_compiled() { return &kNeon; }

}  // namespace skinnyqr::kernels

#endif  // aarch64
