#pragma once

// Cyclic Jacobi eigenvalue solver for small dense real symmetric matrices.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace openheat {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense symmetric matrix, row-major. Only symmetric inputs are meaningful.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  [[nodiscard]] std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  [[nodiscard]] double frobenius_norm() const;
  [[nodiscard]] double off_diagonal_norm() const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

struct JacobiResult {
  std::vector<double> eigenvalues;  ///< ascending
  int sweeps = 0;
};

/// Eigenvalues by cyclic Jacobi rotations. Sweeps until the off-diagonal
/// Frobenius norm drops below rel_tol * ||A||_F; throws ConvergenceError
/// after max_sweeps.
JacobiResult jacobi_eigenvalues(SymmetricMatrix a, double rel_tol = 1e-12, int max_sweeps = 100);

/// Eigenvalues of the Gram matrix A = F^T F from the factor F, given as a
/// list of equally long columns. One-sided (Hestenes) cyclic Jacobi:
/// rotating a pair of columns applies the Jacobi rotation to A without
/// forming it, so small eigenvalues of a graded A keep their relative
/// accuracy. Converged once |f_p . f_q| <= rel_tol |f_p| |f_q| for every
/// pair; throws ConvergenceError after max_sweeps.
JacobiResult jacobi_gram_eigenvalues(std::vector<std::vector<double>> columns,
                                     double rel_tol = 1e-15, int max_sweeps = 100);

}  // namespace openheat
