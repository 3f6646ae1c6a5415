#include "fullgroup/linalg.hpp"

#include <algorithm>
#include <utility>

namespace fullgroup {

EchelonForm echelon(ComplexMatrix a, long pivot_cols) {
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t limit =
      pivot_cols < 0 ? cols : std::min(static_cast<std::size_t>(pivot_cols), cols);
  EchelonForm out;
  // Bareiss-style update: row_i <- (piv * row_i - head * row_pivot) / prev,
  // with prev the previous pivot.  Exact over this field; on integer input it
  // keeps intermediate entries at minor-sized integers instead of letting
  // numerators and denominators blow up.
  GaussianRational prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && a.at(p, col).is_zero()) ++p;
    if (p == rows) continue;  // free column
    if (p != row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(row, j));
    }
    const GaussianRational piv = a.at(row, col);
    for (std::size_t i = row + 1; i < rows; ++i) {
      const GaussianRational head = a.at(i, col);
      if (head.is_zero()) {
        for (std::size_t j = col + 1; j < cols; ++j) {
          if (!a.at(i, j).is_zero()) a.at(i, j) = (piv * a.at(i, j)) / prev;
        }
      } else {
        for (std::size_t j = col + 1; j < cols; ++j) {
          a.at(i, j) = (piv * a.at(i, j) - head * a.at(row, j)) / prev;
        }
        a.at(i, col) = GaussianRational(0);
      }
    }
    prev = piv;
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.mat = std::move(a);
  return out;
}

std::size_t rank(const ComplexMatrix& a) { return echelon(a).rank(); }

namespace {

// Kernel vectors from an echelon form whose first `cols` columns are the
// matrix of interest: one vector per free column with a 1 there, solved over
// the pivot columns bottom-up.  Depends only on the row space, hence canonical.
std::vector<std::vector<GaussianRational>> kernel_from_echelon(const EchelonForm& ef,
                                                               std::size_t cols) {
  const auto& piv = ef.pivot_cols;
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : piv) is_pivot[c] = 1;
  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<GaussianRational> x(cols);
    x[free_col] = 1;
    for (std::size_t ri = piv.size(); ri-- > 0;) {
      const std::size_t pc = piv[ri];
      if (pc > free_col) continue;  // its pivot variable stays 0
      GaussianRational acc = ef.mat.at(ri, free_col);
      for (std::size_t rj = ri + 1; rj < piv.size(); ++rj) {
        const std::size_t pcj = piv[rj];
        if (pcj < free_col && !x[pcj].is_zero() && !ef.mat.at(ri, pcj).is_zero()) {
          acc += ef.mat.at(ri, pcj) * x[pcj];
        }
      }
      if (!acc.is_zero()) x[pc] = -acc / ef.mat.at(ri, pc);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<GaussianRational>> kernel_basis(const ComplexMatrix& a) {
  EchelonForm ef = echelon(a);
  return kernel_from_echelon(ef, a.cols());
}

LinearSolver::LinearSolver(const ComplexMatrix& a) : rows_(a.rows()), cols_(a.cols()) {
  ComplexMatrix augmented(rows_, cols_ + rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) augmented.at(i, j) = a.at(i, j);
    augmented.at(i, cols_ + i) = 1;
  }
  echelon_ = echelon(std::move(augmented), static_cast<long>(cols_));
}

bool LinearSolver::consistent(const std::vector<GaussianRational>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("right-hand side has wrong length");
  // Rows past the rank are zero in the A block, so E*b must vanish there.
  for (std::size_t i = echelon_.rank(); i < rows_; ++i) {
    GaussianRational y;
    for (std::size_t j = 0; j < rows_; ++j) {
      const GaussianRational& e = echelon_.mat.at(i, cols_ + j);
      if (!e.is_zero() && !b[j].is_zero()) y += e * b[j];
    }
    if (!y.is_zero()) return false;
  }
  return true;
}

std::optional<std::vector<GaussianRational>> LinearSolver::solve(
    const std::vector<GaussianRational>& b) const {
  if (!consistent(b)) return std::nullopt;
  const auto& piv = echelon_.pivot_cols;
  std::vector<GaussianRational> x(cols_);
  for (std::size_t ri = piv.size(); ri-- > 0;) {
    GaussianRational y;
    for (std::size_t j = 0; j < rows_; ++j) {
      const GaussianRational& e = echelon_.mat.at(ri, cols_ + j);
      if (!e.is_zero() && !b[j].is_zero()) y += e * b[j];
    }
    for (std::size_t rj = ri + 1; rj < piv.size(); ++rj) {
      const GaussianRational& coeff = echelon_.mat.at(ri, piv[rj]);
      if (!coeff.is_zero() && !x[piv[rj]].is_zero()) y -= coeff * x[piv[rj]];
    }
    if (!y.is_zero()) x[piv[ri]] = y / echelon_.mat.at(ri, piv[ri]);
  }
  return x;
}

std::vector<std::vector<GaussianRational>> LinearSolver::kernel() const {
  return kernel_from_echelon(echelon_, cols_);
}

}  // namespace fullgroup
