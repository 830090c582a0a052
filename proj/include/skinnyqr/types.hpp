#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace skinnyqr {

//! Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

//! Bad magic or unsupported version/element size in a matrix file.
class FormatError : public Error {
 public:
  using Error::Error;
};

//! File ends before the payload announced by the header.
class TruncationError : public Error {
 public:
  using Error::Error;
};

//! Zero or inconsistent dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

//! m*n would overflow the addressable payload size.
class SizeOverflowError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

//! Cholesky hit a non-positive pivot; carries the offending column index.
class BreakdownError : public Error {
 public:
  BreakdownError(const std::string& what, std::size_t index)
      : Error(what), pivot_index(index) {}
  std::size_t pivot_index;
};

//! All eigenvalues of the Gram matrix were truncated (input is numerically zero).
class ZeroMatrixError : public Error {
 public:
  using Error::Error;
};

//! Triangular factor has a diagonal entry below the singularity tolerance.
class SingularFactorError : public Error {
 public:
  SingularFactorError(const std::string& what, std::size_t index)
      : Error(what), diagonal_index(index) {}
  std::size_t diagonal_index;
};

class RankDeficiencyError : public Error {
 public:
  RankDeficiencyError(const std::string& what, std::size_t index)
      : Error(what), diagonal_index(index) {}
  std::size_t diagonal_index;
};

//! Column-contiguous dense FP64 matrix. Element (i,j) lives at data[j*rows + i].
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      throw DimensionError("DenseMatrix: data length != rows*cols");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  double* col(std::size_t j) { return data_.data() + j * rows_; }
  const double* col(std::size_t j) const { return data_.data() + j * rows_; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
  std::string label_;
};

//! n x n upper triangular factor, stored as a full column-major square.
//! Entries strictly below the diagonal are exactly zero. Final factors follow
//! the library sign convention (nonnegative diagonal, see sign_normalize).
class UpperTriangular {
 public:
  UpperTriangular() = default;
  explicit UpperTriangular(std::size_t order)
      : order_(order), data_(order * order, 0.0) {}

  std::size_t order() const { return order_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[j * order_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[j * order_ + i]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

//! Symmetric n x n Gram accumulator. Symmetry holds exactly: only one
//! triangle is computed, then mirrored.
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(std::size_t order)
      : order_(order), data_(order * order, 0.0) {}

  std::size_t order() const { return order_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[j * order_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[j * order_ + i]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  //! Copy the upper triangle (i <= j) onto the lower one.
  void mirror_upper() {
    for (std::size_t j = 0; j < order_; ++j)
      for (std::size_t i = 0; i < j; ++i) (*this)(j, i) = (*this)(i, j);
  }

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

//! Flip rows of R so every diagonal entry is nonnegative. QR is unique up to
//! diagonal signs for full-rank input, so this makes factors comparable.
void sign_normalize(UpperTriangular& r);

//! Frobenius norm with blocked pairwise accumulation (block 256).
double frobenius_norm(const DenseMatrix& x);

//! Throws unless rows >= cols >= 1 and all entries are finite.
void validate_factorization_input(const DenseMatrix& x, const char* op);

}  // namespace skinnyqr
