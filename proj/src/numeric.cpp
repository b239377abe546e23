#include "zetakit/numeric.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace zetakit {

namespace {

constexpr std::array<double, 9> lanczos_p = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double lanczos_g = 7.0;

const double half_log_two_pi = 0.5 * std::log(2.0 * pi);

Complex stirling(Complex z) {
  const Complex r = 1.0 / z;
  const Complex r2 = r * r;
  const Complex corr = r * (1.0 / 12.0 - r2 * (1.0 / 360.0 - r2 * (1.0 / 1260.0 - r2 / 1680.0)));
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + corr;
}

// Principal-branch estimate, accurate to far better than π: Stirling after
// shifting to Re >= 10, then the recurrence back down.
Complex branch_estimate(Complex z) {
  const int n = z.real() < 10.0 ? int(std::ceil(10.0 - z.real())) : 0;
  Complex est = stirling(z + double(n));
  for (int j = 0; j < n; ++j) est -= std::log(z + double(j));
  return est;
}

Complex on_branch(Complex f, Complex z) {
  const double k = std::round((branch_estimate(z).imag() - f.imag()) / (2.0 * pi));
  return f + Complex(0.0, 2.0 * pi * k);
}

// Re z >= 0.5
Complex log_gamma_right(Complex z) {
  const Complex w = z - 1.0;
  Complex a = lanczos_p[0];
  for (std::size_t k = 1; k < lanczos_p.size(); ++k) a += lanczos_p[k] / (w + double(k));
  const Complex t = w + lanczos_g + 0.5;
  return on_branch(half_log_two_pi + (w + 0.5) * std::log(t) - t + std::log(a), z);
}

// principal log sin(πz) without overflow for large |Im z|
Complex log_sin_pi(Complex z) {
  const double y = z.imag();
  if (std::abs(y) < 15.0) return std::log(std::sin(pi * z));
  Complex l;
  if (y > 0) {
    // sin(πz) = e^{−iπz}(1 − e^{2iπz}) · i/2
    l = Complex(0, -pi) * z + std::log(Complex(0, 0.5)) + std::log(1.0 - std::exp(Complex(0, 2 * pi) * z));
  } else {
    // sin(πz) = e^{iπz}(1 − e^{−2iπz}) / (2i)
    l = Complex(0, pi) * z - std::log(Complex(0, 2)) + std::log(1.0 - std::exp(Complex(0, -2 * pi) * z));
  }
  double im = std::remainder(l.imag(), 2.0 * pi);
  if (im <= -pi) im += 2.0 * pi;
  return {l.real(), im};
}

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::pole: return "pole";
    case ErrorKind::domain: return "domain";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::degree_cap: return "degree-cap";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::division: return "division";
    case ErrorKind::range: return "range";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

bool is_nonpositive_integer(Complex z) noexcept {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(ErrorKind::domain, "log_gamma: non-finite argument");
  if (is_nonpositive_integer(z)) throw Error(ErrorKind::pole, "log_gamma: pole at non-positive integer");
  if (z.real() >= 0.5) return log_gamma_right(z);

  const double x = z.real();
  const double y = z.imag();
  if (y == 0.0) {
    const double re = std::log(pi) - std::log(std::abs(std::sin(pi * x))) - log_gamma_right(1.0 - x).real();
    return {re, -pi * std::ceil(-x)};
  }
  return on_branch(std::log(pi) - log_sin_pi(z) - log_gamma_right(1.0 - z), z);
}

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw Error(ErrorKind::pole, "gamma: pole at non-positive integer");
  if (z.imag() == 0.0 && z.real() < 0.5) {
    // keep the sign exact on the real axis
    const double x = z.real();
    return Complex(pi / (std::sin(pi * x) * std::exp(log_gamma_right(1.0 - x).real())), 0.0);
  }
  return std::exp(log_gamma(z));
}

Complex reciprocal_gamma(Complex z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.imag() == 0.0 && z.real() < 0.5) {
    const double x = z.real();
    return Complex(std::sin(pi * x) * std::exp(log_gamma_right(1.0 - x).real()) / pi, 0.0);
  }
  return std::exp(-log_gamma(z));
}

Complex gamma_ratio(std::span<const Complex> num, std::span<const Complex> den) {
  for (const Complex& d : den)
    if (is_nonpositive_integer(d)) return 0.0;
  Complex acc = 0.0;
  for (const Complex& n : num) {
    if (is_nonpositive_integer(n)) throw Error(ErrorKind::pole, "gamma_ratio: numerator at a pole of Γ");
    acc += log_gamma(n);
  }
  for (const Complex& d : den) acc -= log_gamma(d);
  const Complex v = std::exp(acc);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error(ErrorKind::overflow, "gamma_ratio: overflow");
  return v;
}

Complex gamma_ratio(std::initializer_list<Complex> num, std::initializer_list<Complex> den) {
  return gamma_ratio(std::span<const Complex>(num.begin(), num.size()),
                     std::span<const Complex>(den.begin(), den.size()));
}

Complex binomial_general(Complex a, std::size_t k) noexcept {
  Complex r = 1.0;
  for (std::size_t j = 1; j <= k; ++j) r *= (a - double(j - 1)) / double(j);
  return r;
}

Complex log_principal(Complex z) {
  if (z.imag() == 0.0) z = Complex(z.real(), 0.0);  // −0 would select −π
  return std::log(z);
}

Complex pow_principal(Complex z, Complex s) {
  if (z == Complex(0.0, 0.0)) {
    if (s.real() > 0.0) return 0.0;
    throw Error(ErrorKind::domain, "pow_principal: 0^s requires Re(s) > 0");
  }
  return std::exp(s * log_principal(z));
}

}  // namespace zetakit
