#pragma once

#include <cstddef>
#include <string_view>

namespace relm::kern {

// Double-precision arithmetic primitives behind every inner loop: forward
// passes, CMA-ES sampling and covariance updates. A scalar reference
// implementation always exists; AVX2 (x86-64) and NEON (aarch64) variants
// are selected once at startup based on what the CPU supports. Variants may
// reassociate reductions and use FMA, so results can differ from the scalar
// reference in the last ulps; the equivalence tests bound that difference.

struct Backend {
  const char* name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += a * x
  void (*axpy)(double* y, double a, const double* x, std::size_t n);
  // x *= a
  void (*scale)(double* x, double a, std::size_t n);
  double (*sumsq)(const double* x, std::size_t n);
  // y = M x, M row-major (rows x cols)
  void (*matvec)(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y);
  // M += coef * v v^T, M row-major (n x n)
  void (*rank1)(double* m, std::size_t n, double coef, const double* v);
};

const Backend& scalar_backend();
const Backend* avx2_backend();  // nullptr when not compiled in
const Backend* neon_backend();  // nullptr when not compiled in

// Active backend. Resolution order: RELM_KERNELS env var if set ("scalar",
// "avx2", "neon"), otherwise the best variant the CPU reports.
const Backend& active();
std::string_view active_name();

// Force a backend by name; returns false if unknown or unsupported on this
// host. Intended for tests.
bool set_active(std::string_view name);

inline double dot(const double* a, const double* b, std::size_t n) { return active().dot(a, b, n); }
inline void axpy(double* y, double a, const double* x, std::size_t n) { active().axpy(y, a, x, n); }
inline void scale(double* x, double a, std::size_t n) { active().scale(x, a, n); }
inline double sumsq(const double* x, std::size_t n) { return active().sumsq(x, n); }
inline void matvec(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y) {
  active().matvec(m, rows, cols, x, y);
}
inline void rank1(double* m, std::size_t n, double coef, const double* v) { active().rank1(m, n, coef, v); }

}  // namespace relm::kern
