#include "relm/linalg.hpp"

#include <lapacke.h>

#include <cmath>

#include "relm/errors.hpp"

namespace relm::linalg {

SymEig sym_eig(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("sym_eig: matrix not square");
  const auto n = static_cast<lapack_int>(m.rows());
  SymEig out;
  out.vectors = m;
  out.values.resize(m.rows());
  // The input is symmetric, so its row-major and column-major layouts are
  // byte-identical and the column-major path (no transposition buffer)
  // applies directly. dsyevd leaves eigenvector j in column j of the
  // column-major buffer, which reads back as row j of the row-major Matrix.
  lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, out.vectors.data(), n,
                                   out.values.data());
  if (info != 0) throw NumericError("dsyevd failed with info=" + std::to_string(info));
  for (double v : out.values)
    if (!std::isfinite(v)) throw NumericError("dsyevd produced non-finite eigenvalue");
  return out;
}

void symmetrize(Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r + 1; c < m.cols(); ++c) {
      double v = 0.5 * (m(r, c) + m(c, r));
      m(r, c) = v;
      m(c, r) = v;
    }
}

}  // namespace relm::linalg
