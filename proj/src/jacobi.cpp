#include "openheat/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace openheat {

double SymmetricMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : data_) sum += v * v;
  return std::sqrt(sum);
}

double SymmetricMatrix::off_diagonal_norm() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j) sum += (*this)(i, j) * (*this)(i, j);
    }
  }
  return std::sqrt(sum);
}

JacobiResult jacobi_eigenvalues(SymmetricMatrix a, double rel_tol, int max_sweeps) {
  const std::size_t n = a.size();
  const double target = rel_tol * a.frobenius_norm();
  JacobiResult result;

  while (a.off_diagonal_norm() > target) {
    if (result.sweeps == max_sweeps) {
      throw ConvergenceError("jacobi_eigenvalues: no convergence within sweep limit");
    }
    ++result.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle from cot(2 phi) = (a_qq - a_pp) / (2 a_pq), smaller root for t.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
          a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
        }
      }
    }
  }

  result.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = a(i, i);
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
  return result;
}

JacobiResult jacobi_gram_eigenvalues(std::vector<std::vector<double>> columns, double rel_tol,
                                     int max_sweeps) {
  const std::size_t n = columns.size();
  const std::size_t m = n ? columns[0].size() : 0;
  for (const auto& c : columns) {
    if (c.size() != m) throw std::invalid_argument("jacobi_gram_eigenvalues: ragged columns");
  }
  auto dot = [m](const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k) s += x[k] * y[k];
    return s;
  };

  // columns of a rank-deficient factor settle at rounding noise, where the
  // relative test alone never fires
  double total = 0.0;
  for (const auto& c : columns) total += dot(c, c);
  const double eps = std::numeric_limits<double>::epsilon();
  const double floor = eps * eps * static_cast<double>(n) * total;

  JacobiResult result;
  for (bool rotated = true; rotated;) {
    rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        auto& x = columns[p];
        auto& y = columns[q];
        const double app = dot(x, x);
        const double aqq = dot(y, y);
        const double apq = dot(x, y);
        if (std::abs(apq) <= rel_tol * std::sqrt(app * aqq) || std::abs(apq) <= floor) continue;
        if (!rotated && result.sweeps == max_sweeps) {
          throw ConvergenceError("jacobi_gram_eigenvalues: no convergence within sweep limit");
        }
        if (!rotated) ++result.sweeps;
        rotated = true;
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double xk = x[k];
          const double yk = y[k];
          x[k] = c * xk - s * yk;
          y[k] = s * xk + c * yk;
        }
      }
    }
  }

  result.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = dot(columns[i], columns[i]);
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
  return result;
}

}  // namespace openheat
