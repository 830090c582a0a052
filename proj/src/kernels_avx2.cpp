#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "skinnyqr/kernels.hpp"

namespace skinnyqr::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* a, const double* b, std::size_t len) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= len; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < len; ++i) s += a[i] * b[i];
  return s;
}

void syrk_upper_avx2(double* c, std::size_t ldc, const double* w, std::size_t ldw,
                     std::size_t rows, std::size_t cols) {
  for (std::size_t j = 0; j < cols; ++j) {
    const double* wj = w + j * ldw;
    for (std::size_t i = 0; i <= j; ++i)
      c[j * ldc + i] += dot_avx2(w + i * ldw, wj, rows);
  }
}

void axpy_avx2(double* y, double alpha, const double* x, std::size_t len) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < len; ++i) y[i] += alpha * x[i];
}

void scal_avx2(double* x, double alpha, std::size_t len) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < len; ++i) x[i] *= alpha;
}

void trsm_right_upper_avx2(double* w, std::size_t ldw, std::size_t rows, std::size_t cols,
                           const double* r, std::size_t ldr, const double* inv_diag) {
  for (std::size_t j = 0; j < cols; ++j) {
    double* wj = w + j * ldw;
    for (std::size_t i = 0; i < j; ++i) {
      const double rij = r[j * ldr + i];
      if (rij == 0.0) continue;
      axpy_avx2(wj, -rij, w + i * ldw, rows);
    }
    scal_avx2(wj, inv_diag[j], rows);
  }
}

void gemm_right_avx2(double* out, std::size_t ldo, const double* w, std::size_t ldw,
                     std::size_t rows, std::size_t cols, const double* b, std::size_t ldb) {
  for (std::size_t j = 0; j < cols; ++j) {
    double* oj = out + j * ldo;
    for (std::size_t k = 0; k < rows; ++k) oj[k] = 0.0;
    for (std::size_t i = 0; i < cols; ++i) {
      const double bij = b[j * ldb + i];
      if (bij == 0.0) continue;
      axpy_avx2(oj, bij, w + i * ldw, rows);
    }
  }
}

void dot2_avx2(const double* v, const double* w, const double* x, std::size_t len,
               double* vx, double* wx) {
  __m256d av = _mm256_setzero_pd();
  __m256d aw = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    av = _mm256_fmadd_pd(_mm256_loadu_pd(v + i), xv, av);
    aw = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), xv, aw);
  }
  double sv = hsum(av), sw = hsum(aw);
  for (; i < len; ++i) {
    sv += v[i] * x[i];
    sw += w[i] * x[i];
  }
  *vx = sv;
  *wx = sw;
}

void apply2_avx2(double* x, const double* v, const double* w, double a, double c,
                 std::size_t len) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d xv = _mm256_loadu_pd(x + i);
    xv = _mm256_fnmadd_pd(va, _mm256_loadu_pd(v + i), xv);
    xv = _mm256_fnmadd_pd(vc, _mm256_loadu_pd(w + i), xv);
    _mm256_storeu_pd(x + i, xv);
  }
  for (; i < len; ++i) x[i] -= a * v[i] + c * w[i];
}

void pair_dots4_avx2(const double* v, const double* w, const double* x, std::size_t ldx,
                     std::size_t len, double vx[4], double wx[4]) {
  __m256d av0 = _mm256_setzero_pd(), av1 = _mm256_setzero_pd();
  __m256d av2 = _mm256_setzero_pd(), av3 = _mm256_setzero_pd();
  __m256d aw0 = _mm256_setzero_pd(), aw1 = _mm256_setzero_pd();
  __m256d aw2 = _mm256_setzero_pd(), aw3 = _mm256_setzero_pd();
  const double* x0 = x;
  const double* x1 = x + ldx;
  const double* x2 = x + 2 * ldx;
  const double* x3 = x + 3 * ldx;
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d vv = _mm256_loadu_pd(v + i);
    const __m256d wv = _mm256_loadu_pd(w + i);
    const __m256d c0 = _mm256_loadu_pd(x0 + i);
    const __m256d c1 = _mm256_loadu_pd(x1 + i);
    const __m256d c2 = _mm256_loadu_pd(x2 + i);
    const __m256d c3 = _mm256_loadu_pd(x3 + i);
    av0 = _mm256_fmadd_pd(vv, c0, av0);
    av1 = _mm256_fmadd_pd(vv, c1, av1);
    av2 = _mm256_fmadd_pd(vv, c2, av2);
    av3 = _mm256_fmadd_pd(vv, c3, av3);
    aw0 = _mm256_fmadd_pd(wv, c0, aw0);
    aw1 = _mm256_fmadd_pd(wv, c1, aw1);
    aw2 = _mm256_fmadd_pd(wv, c2, aw2);
    aw3 = _mm256_fmadd_pd(wv, c3, aw3);
  }
  vx[0] = hsum(av0); vx[1] = hsum(av1); vx[2] = hsum(av2); vx[3] = hsum(av3);
  wx[0] = hsum(aw0); wx[1] = hsum(aw1); wx[2] = hsum(aw2); wx[3] = hsum(aw3);
  for (; i < len; ++i) {
    vx[0] += v[i] * x0[i]; wx[0] += w[i] * x0[i];
    vx[1] += v[i] * x1[i]; wx[1] += w[i] * x1[i];
    vx[2] += v[i] * x2[i]; wx[2] += w[i] * x2[i];
    vx[3] += v[i] * x3[i]; wx[3] += w[i] * x3[i];
  }
}

void pair_update4_avx2(double* x, std::size_t ldx, const double* v, const double* w,
                       const double a[4], const double c[4], std::size_t len) {
  double* x0 = x;
  double* x1 = x + ldx;
  double* x2 = x + 2 * ldx;
  double* x3 = x + 3 * ldx;
  const __m256d a0 = _mm256_set1_pd(a[0]), a1 = _mm256_set1_pd(a[1]);
  const __m256d a2 = _mm256_set1_pd(a[2]), a3 = _mm256_set1_pd(a[3]);
  const __m256d c0 = _mm256_set1_pd(c[0]), c1 = _mm256_set1_pd(c[1]);
  const __m256d c2 = _mm256_set1_pd(c[2]), c3 = _mm256_set1_pd(c[3]);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d vv = _mm256_loadu_pd(v + i);
    const __m256d wv = _mm256_loadu_pd(w + i);
    __m256d t0 = _mm256_loadu_pd(x0 + i);
    __m256d t1 = _mm256_loadu_pd(x1 + i);
    __m256d t2 = _mm256_loadu_pd(x2 + i);
    __m256d t3 = _mm256_loadu_pd(x3 + i);
    t0 = _mm256_fnmadd_pd(a0, vv, t0);
    t1 = _mm256_fnmadd_pd(a1, vv, t1);
    t2 = _mm256_fnmadd_pd(a2, vv, t2);
    t3 = _mm256_fnmadd_pd(a3, vv, t3);
    t0 = _mm256_fnmadd_pd(c0, wv, t0);
    t1 = _mm256_fnmadd_pd(c1, wv, t1);
    t2 = _mm256_fnmadd_pd(c2, wv, t2);
    t3 = _mm256_fnmadd_pd(c3, wv, t3);
    _mm256_storeu_pd(x0 + i, t0);
    _mm256_storeu_pd(x1 + i, t1);
    _mm256_storeu_pd(x2 + i, t2);
    _mm256_storeu_pd(x3 + i, t3);
  }
  for (; i < len; ++i) {
    x0[i] -= a[0] * v[i] + c[0] * w[i];
    x1[i] -= a[1] * v[i] + c[1] * w[i];
    x2[i] -= a[2] * v[i] + c[2] * w[i];
    x3[i] -= a[3] * v[i] + c[3] * w[i];
  }
}

const KernelTable kAvx2 = {
    "avx2",
    syrk_upper_avx2,
    trsm_right_upper_avx2,
    gemm_right_avx2,
    dot_avx2,
    axpy_avx2,
    scal_avx2,
    dot2_avx2,
    apply2_avx2,
    pair_dots4_avx2,
    pair_update4_avx2,
};

}  // namespace

const KernelTable* avx2_table_compiled() { return &kAvx2; }

}  // namespace skinnyqr::kernels

#endif  // x86_64
