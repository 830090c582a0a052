#include "skinnyqr/kernels.hpp"

namespace skinnyqr::kernels {
namespace {

void syrk_upper_scalar(double* c, std::size_t ldc, const double* w, std::size_t ldw,
                       std::size_t rows, std::size_t cols) {
  for (std::size_t j = 0; j < cols; ++j) {
    const double* wj = w + j * ldw;
    for (std::size_t i = 0; i <= j; ++i) {
      const double* wi = w + i * ldw;
      double s = 0.0;
      for (std::size_t r = 0; r < rows; ++r) s += wi[r] * wj[r];
      c[j * ldc + i] += s;
    }
  }
}

void trsm_right_upper_scalar(double* w, std::size_t ldw, std::size_t rows, std::size_t cols,
                             const double* r, std::size_t ldr, const double* inv_diag) {
  for (std::size_t j = 0; j < cols; ++j) {
    double* wj = w + j * ldw;
    for (std::size_t i = 0; i < j; ++i) {
      const double rij = r[j * ldr + i];
      if (rij == 0.0) continue;
      const double* wi = w + i * ldw;
      for (std::size_t k = 0; k < rows; ++k) wj[k] -= rij * wi[k];
    }
    const double d = inv_diag[j];
    for (std::size_t k = 0; k < rows; ++k) wj[k] *= d;
  }
}

void gemm_right_scalar(double* out, std::size_t ldo, const double* w, std::size_t ldw,
                       std::size_t rows, std::size_t cols, const double* b, std::size_t ldb) {
  for (std::size_t j = 0; j < cols; ++j) {
    double* oj = out + j * ldo;
    for (std::size_t k = 0; k < rows; ++k) oj[k] = 0.0;
    for (std::size_t i = 0; i < cols; ++i) {
      const double bij = b[j * ldb + i];
      if (bij == 0.0) continue;
      const double* wi = w + i * ldw;
      for (std::size_t k = 0; k < rows; ++k) oj[k] += bij * wi[k];
    }
  }
}

double dot_scalar(const double* a, const double* b, std::size_t len) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double* y, double alpha, const double* x, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) y[i] += alpha * x[i];
}

void scal_scalar(double* x, double alpha, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) x[i] *= alpha;
}

void dot2_scalar(const double* v, const double* w, const double* x, std::size_t len,
                 double* vx, double* wx) {
  double sv = 0.0, sw = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    sv += v[i] * x[i];
    sw += w[i] * x[i];
  }
  *vx = sv;
  *wx = sw;
}

void apply2_scalar(double* x, const double* v, const double* w, double a, double c,
                   std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) x[i] -= a * v[i] + c * w[i];
}

void pair_dots4_scalar(const double* v, const double* w, const double* x, std::size_t ldx,
                       std::size_t len, double vx[4], double wx[4]) {
  for (int j = 0; j < 4; ++j) {
    const double* xj = x + static_cast<std::size_t>(j) * ldx;
    double sv = 0.0, sw = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      sv += v[i] * xj[i];
      sw += w[i] * xj[i];
    }
    vx[j] = sv;
    wx[j] = sw;
  }
}

void pair_update4_scalar(double* x, std::size_t ldx, const double* v, const double* w,
                         const double a[4], const double c[4], std::size_t len) {
  for (int j = 0; j < 4; ++j) {
    double* xj = x + static_cast<std::size_t>(j) * ldx;
    for (std::size_t i = 0; i < len; ++i) xj[i] -= a[j] * v[i] + c[j] * w[i];
  }
}

const KernelTable kScalar = {
    "scalar",
    syrk_upper_scalar,
    trsm_right_upper_scalar,
    gemm_right_scalar,
    dot_scalar,
    axpy_scalar,
    scal_scalar,
    dot2_scalar,
    apply2_scalar,
    pair_dots4_scalar,
    pair_update4_scalar,
};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace skinnyqr::kernels
