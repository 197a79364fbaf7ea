#include "openheat/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace openheat::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Re z >= 1/2, Im z >= 0.
Complex log_gamma_right(Complex z) {
  const Complex w = z - 1.0;
  Complex series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (w + static_cast<double>(i));
  }
  const Complex t = w + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (w + 0.5) * std::log(t) - t + std::log(series);
}

// log(sin(pi z)) for Im z >= 0 without overflow: sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i).
Complex log_sin_pi(Complex z) {
  const Complex i{0.0, 1.0};
  const Complex e2 = std::exp(2.0 * i * kPi * z);
  return -i * kPi * z + std::log(e2 - 1.0) - std::log(2.0 * i);
}

double wrap_phase(double phi) {
  phi = std::remainder(phi, 2.0 * kPi);
  if (phi <= -kPi) phi += 2.0 * kPi;
  return phi;
}

// Bernoulli numbers B_2 .. B_16 for the trigamma asymptotic tail.
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0,   -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0};

constexpr double kTrigammaShift = 10.0;

// Re z >= 1/2, Im z >= 0.
Complex trigamma_right(Complex z) {
  Complex acc = 0.0;
  while (z.real() < kTrigammaShift) {
    acc += 1.0 / (z * z);
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  // sum_k B_2k / z^(2k+1), Horner in 1/z^2
  Complex tail = 0.0;
  for (auto b = kBernoulli.rbegin(); b != kBernoulli.rend(); ++b) {
    tail = tail * inv2 + *b;
  }
  tail *= inv2 * inv;
  return acc + inv + 0.5 * inv2 + tail;
}

}  // namespace

int CubicRoots::complex_count() const {
  return static_cast<int>(
      std::count_if(roots.begin(), roots.end(), [](Complex r) { return r.imag() != 0.0; }));
}

double boson_heat(double x) {
  if (!(x >= 0.0)) {
    throw std::invalid_argument("boson_heat: argument must be non-negative");
  }
  if (x <= 1e-2) {
    const double x2 = x * x;
    return 1.0 - x2 / 3.0 + x2 * x2 / 15.0;
  }
  const double r = 2.0 * x * std::exp(-x) / -std::expm1(-2.0 * x);
  return r * r;
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: pole at non-positive integer");
  }
  if (z.imag() < 0.0) {
    return std::conj(log_gamma(std::conj(z)));
  }
  if (z.real() >= 0.5) {
    return log_gamma_right(z);
  }
  // Gamma(z) Gamma(1-z) = pi / sin(pi z)
  const Complex reflected = std::conj(log_gamma_right(std::conj(1.0 - z)));
  const Complex value = std::log(kPi) - log_sin_pi(z) - reflected;
  return {value.real(), wrap_phase(value.imag())};
}

Complex trigamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("trigamma: pole at non-positive integer");
  }
  if (z.imag() < 0.0) {
    return std::conj(trigamma(std::conj(z)));
  }
  if (z.real() >= 0.5) {
    return trigamma_right(z);
  }
  // psi'(z) + psi'(1-z) = pi^2 / sin^2(pi z); for Im z >= 0,
  // 1/sin(pi z) = 2i e^{i pi z} / (e^{2 i pi z} - 1) stays bounded.
  const Complex i{0.0, 1.0};
  const Complex inv_sin = 2.0 * i * std::exp(i * kPi * z) / (std::exp(2.0 * i * kPi * z) - 1.0);
  const Complex other = std::conj(trigamma_right(std::conj(1.0 - z)));
  return kPi * kPi * inv_sin * inv_sin - other;
}

namespace {

bool root_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

double cubic_value(double c2, double c1, double c0, double x) {
  return ((x + c2) * x + c1) * x + c0;
}

double real_cubic_root(double c2, double c1, double c0) {
  // Cauchy bound: every root satisfies |x| < 1 + max|c_i|.
  const double bound = 1.0 + std::max({std::abs(c2), std::abs(c1), std::abs(c0)});
  double lo = -bound;
  double hi = bound;
  double x = 0.0;
  if (cubic_value(c2, c1, c0, x) == 0.0) return x;
  for (int it = 0; it < 400; ++it) {
    const double fx = cubic_value(c2, c1, c0, x);
    if (fx == 0.0) return x;
    (fx < 0.0 ? lo : hi) = x;
    const double dfx = (3.0 * x + 2.0 * c2) * x + c1;
    double next = dfx != 0.0 ? x - fx / dfx : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
      return next;
    }
    x = next;
  }
  return x;
}

Complex polish(double c2, double c1, double c0, Complex z) {
  const Complex p = ((z + c2) * z + c1) * z + c0;
  const Complex dp = (3.0 * z + 2.0 * c2) * z + c1;
  if (std::abs(dp) == 0.0) return z;
  const Complex next = z - p / dp;
  const Complex p_next = ((next + c2) * next + c1) * next + c0;
  return std::abs(p_next) < std::abs(p) ? next : z;
}

}  // namespace

std::array<Complex, 2> solve_quadratic(double b, double c) {
  const double disc = b * b - 4.0 * c;
  if (disc < 0.0) {
    const double re = -0.5 * b;
    const double im = 0.5 * std::sqrt(-disc);
    return {Complex{re, -im}, Complex{re, im}};
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double r1 = q;
  double r2 = q != 0.0 ? c / q : 0.0;
  if (r2 < r1) std::swap(r1, r2);
  return {Complex{r1, 0.0}, Complex{r2, 0.0}};
}

CubicRoots solve_cubic(double c2, double c1, double c0) {
  if (!std::isfinite(c2) || !std::isfinite(c1) || !std::isfinite(c0)) {
    throw std::invalid_argument("solve_cubic: non-finite coefficient");
  }
  const double r = real_cubic_root(c2, c1, c0);
  // x^3 + c2 x^2 + c1 x + c0 = (x - r)(x^2 + b x + c)
  const double b = c2 + r;
  const double c = std::abs(r) > 1.0 ? -c0 / r : c1 + r * b;
  auto pair = solve_quadratic(b, c);

  CubicRoots out;
  out.roots[0] = Complex{polish(c2, c1, c0, r).real(), 0.0};
  if (pair[0].imag() != 0.0) {
    Complex upper = polish(c2, c1, c0, pair[1]);
    if (upper.imag() == 0.0) upper = pair[1];
    out.roots[1] = std::conj(upper);
    out.roots[2] = upper;
  } else {
    out.roots[1] = Complex{polish(c2, c1, c0, pair[0]).real(), 0.0};
    out.roots[2] = Complex{polish(c2, c1, c0, pair[1]).real(), 0.0};
  }
  std::sort(out.roots.begin(), out.roots.end(), root_less);
  return out;
}

}  // namespace openheat::specfun
