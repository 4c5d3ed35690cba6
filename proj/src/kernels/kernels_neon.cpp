#include "relm/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace relm::kern {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  if (i + 2 <= n) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    i += 2;
  }
  double s = vaddvq_f64(acc0) + vaddvq_f64(acc1);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_neon(double* y, double a, const double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vy = vld1q_f64(y + i);
    vy = vfmaq_f64(vy, va, vld1q_f64(x + i));
    vst1q_f64(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_neon(double* x, double a, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(vld1q_f64(x + i), va));
  for (; i < n; ++i) x[i] *= a;
}

double sumsq_neon(const double* x, std::size_t n) { return dot_neon(x, x, n); }

void matvec_neon(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot_neon(m + r * cols, x, cols);
}

void rank1_neon(double* m, std::size_t n, double coef, const double* v) {
  for (std::size_t r = 0; r < n; ++r) axpy_neon(m + r * n, coef * v[r], v, n);
}

}  // namespace

const Backend* neon_backend() {
  static const Backend b{"neon",      dot_neon,    axpy_neon,
                         scale_neon,  sumsq_neon,  matvec_neon,
                         rank1_neon};
  return &b;
}

}  // namespace relm::kern

#else

namespace relm::kern {
const Backend* neon_backend() { return nullptr; }
}  // namespace relm::kern

#endif
