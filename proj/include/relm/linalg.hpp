#pragma once

#include <cstddef>
#include <vector>

#include "relm/serialize.hpp"

namespace relm::linalg {

/// Dense row-major double matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  double* row(std::size_t r) { return data_.data() + r * cols_; }
  const double* row(std::size_t r) const { return data_.data() + r * cols_; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  bool operator==(const Matrix&) const = default;

  void save(serialize::Writer& w) const {
    w.u64(rows_);
    w.u64(cols_);
    w.vec_f64(data_);
  }

  static Matrix load(serialize::Reader& r) {
    Matrix m;
    m.rows_ = r.u64();
    m.cols_ = r.u64();
    m.data_ = r.vec_f64();
    if (m.data_.size() != m.rows_ * m.cols_) throw ModelError("matrix size mismatch");
    return m;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Eigendecomposition of a symmetric matrix. Eigenvalues ascending;
/// vectors.row(i) is the unit eigenvector for values[i].
struct SymEig {
  std::vector<double> values;
  Matrix vectors;
};

/// Full symmetric eigendecomposition (LAPACK dsyevd). Throws NumericError if
/// the decomposition fails or produces non-finite output.
SymEig sym_eig(const Matrix& m);

/// m = (m + m^T) / 2.
void symmetrize(Matrix& m);

}  // namespace relm::linalg
