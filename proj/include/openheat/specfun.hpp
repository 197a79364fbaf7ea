#pragma once

// Special functions and low-degree polynomial roots used by the closed-form
// specific heats and by the complex-temperature partition function.

#include <array>
#include <complex>
#include <stdexcept>

namespace openheat::specfun {

using Complex = std::complex<double>;

/// Thrown when a Gamma-family function is evaluated at one of its poles.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Roots of a monic real cubic, sorted by (real, imag) ascending.
/// Real roots carry an imaginary part of exactly zero; a non-real pair is
/// stored as exact conjugates.
struct CubicRoots {
  std::array<Complex, 3> roots;

  /// Number of roots with a nonzero imaginary part (0 or 2).
  [[nodiscard]] int complex_count() const;
};

/// g(x) = (x / sinh x)^2, the specific heat (in units of k_B) of one
/// harmonic mode at x = hbar*beta*omega/2. Finite for every x >= 0.
double boson_heat(double x);

/// Principal log-Gamma. For Re z >= 1/2 this is the analytic branch that
/// is continuous in the right half plane (it agrees with the usual
/// `loggamma` of computer algebra systems). Left of that the reflection
/// formula is used and the imaginary part is reduced to (-pi, pi].
/// Throws PoleError at non-positive integers.
Complex log_gamma(Complex z);

/// psi'(z), the trigamma function. Throws PoleError at non-positive
/// integers. trigamma(conj(z)) == conj(trigamma(z)) holds exactly.
Complex trigamma(Complex z);

/// All three roots of x^3 + c2 x^2 + c1 x + c0.
CubicRoots solve_cubic(double c2, double c1, double c0);

/// Both roots of x^2 + b x + c, as a conjugate pair when the discriminant
/// is negative. Ordered like CubicRoots.
std::array<Complex, 2> solve_quadratic(double b, double c);

}  // namespace openheat::specfun
