#include "relm/kernels.hpp"

namespace relm::kern {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double* y, double a, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double sumsq_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

void matvec_scalar(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot_scalar(m + r * cols, x, cols);
}

void rank1_scalar(double* m, std::size_t n, double coef, const double* v) {
  for (std::size_t r = 0; r < n; ++r) axpy_scalar(m + r * n, coef * v[r], v, n);
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend b{"scalar",      dot_scalar,    axpy_scalar,
                         scale_scalar,  sumsq_scalar,  matvec_scalar,
                         rank1_scalar};
  return b;
}

}  // namespace relm::kern
