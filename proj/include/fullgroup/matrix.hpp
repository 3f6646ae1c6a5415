#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fullgroup/scalar.hpp"

namespace fullgroup {

/// Dense matrix over the exact complex scalars.  Small and simple on purpose:
/// everything downstream (membership oracles, kernel computations, *-algebra
/// checks) routes through this one type.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const GaussianRational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& z : data_) {
      if (!z.is_zero()) return false;
    }
    return true;
  }

  /// Conjugate transpose.
  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
    }
    return out;
  }

  GaussianRational row_sum(std::size_t i) const {
    GaussianRational s;
    for (std::size_t j = 0; j < cols_; ++j) s += at(i, j);
    return s;
  }

  GaussianRational col_sum(std::size_t j) const {
    GaussianRational s;
    for (std::size_t i = 0; i < rows_; ++i) s += at(i, j);
    return s;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const GaussianRational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const GaussianRational& bkj = b.at(k, j);
          if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw std::invalid_argument("matrix sum shape mismatch");
    }
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw std::invalid_argument("matrix difference shape mismatch");
    }
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const ComplexMatrix& a, const ComplexMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_, cols_;
  std::vector<GaussianRational> data_;
};

}  // namespace fullgroup
