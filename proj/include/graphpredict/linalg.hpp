#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace graphpredict {

// Row-major dense matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  Matrix transposed() const;
  double max_abs() const;
  // Infinity norm: maximum absolute row sum.
  double inf_norm() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);

struct SymmetricEigen {
  std::vector<double> values;  // descending
  Matrix vectors;              // column k pairs with values[k]
  int sweeps = 0;
};

// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
// Eigenvectors are unit length with their largest-magnitude component positive,
// which makes the decomposition unique up to degenerate eigenvalues.
// Throws SymmetryError when |A - A^T| exceeds 1e-8 (relative to max(1, max|A|)).
SymmetricEigen symmetric_eigen(const Matrix& a);

// ||A - V diag(values) V^T||_inf, the reconstruction residual.
double reconstruction_residual(const Matrix& a, const SymmetricEigen& eig);
// max |V^T V - I|.
double orthonormality_error(const Matrix& v);

}  // namespace graphpredict
