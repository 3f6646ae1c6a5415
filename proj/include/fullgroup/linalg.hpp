#pragma once

#include <optional>
#include <vector>

#include "fullgroup/matrix.hpp"
#include "fullgroup/scalar.hpp"

namespace fullgroup {

/// Row echelon form produced by fraction-free (Bareiss-style) forward
/// elimination.  Row operations are applied to entire rows, so when the input
/// is an augmented block matrix [A | B] the output satisfies R = E * [A | B]
/// for the invertible row transform E accumulated in the B block.
struct EchelonForm {
  ComplexMatrix mat;
  std::vector<std::size_t> pivot_cols;  // one per pivot row, increasing
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Eliminates with pivots restricted to the first `pivot_cols` columns
/// (everything, when the default -1 is kept).  Deterministic: pivots are the
/// first nonzero entry scanning down each column left to right.
EchelonForm echelon(ComplexMatrix a, long pivot_cols = -1);

std::size_t rank(const ComplexMatrix& a);

/// Basis of the right kernel of a, one vector per free column, in increasing
/// free-column order; each vector has entry 1 at its free column.  The result
/// is a canonical form: it depends only on a, not on elimination choices.
std::vector<std::vector<GaussianRational>> kernel_basis(const ComplexMatrix& a);

/// Exact solver for repeated consistency questions Ax = b against one fixed A:
/// factorizes [A | I] once, then answers each query with a matrix-vector
/// product and a back-substitution.
class LinearSolver {
 public:
  explicit LinearSolver(const ComplexMatrix& a);

  std::size_t rank() const { return echelon_.rank(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool consistent(const std::vector<GaussianRational>& b) const;

  /// A solution of Ax = b with zeros on the free columns, or nullopt when the
  /// system is inconsistent.
  std::optional<std::vector<GaussianRational>> solve(
      const std::vector<GaussianRational>& b) const;

  /// Kernel basis of A, computed from the cached factorization.
  std::vector<std::vector<GaussianRational>> kernel() const;

 private:
  std::size_t rows_, cols_;
  EchelonForm echelon_;  // echelon form of [A | I]
};

}  // namespace fullgroup
