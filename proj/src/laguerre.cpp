#include "zetakit/laguerre.hpp"

#include <cmath>
#include <string>

namespace zetakit {

Complex laguerre_explicit(const LaguerreQuery& q) {
  const std::size_t i = q.degree;
  if (i > laguerre_explicit_cap)
    throw Error(ErrorKind::degree_cap,
                "laguerre_explicit: degree " + std::to_string(i) + " exceeds cap " +
                    std::to_string(laguerre_explicit_cap));
  Complex sum = 0.0;
  Complex zpow = 1.0;  // z^j / j!
  for (std::size_t j = 0; j <= i; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binomial_general(double(i) + q.order, i - j) * zpow;
    zpow *= q.argument / double(j + 1);
  }
  return sum;
}

void laguerre_recur_batch(Complex alpha, Complex z, std::span<Complex> out) {
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = 1.0 + alpha - z;
  for (std::size_t j = 2; j < out.size(); ++j) {
    const double dj = double(j);
    out[j] = ((2.0 * dj + alpha - 1.0 - z) * out[j - 1] - (dj + alpha - 1.0) * out[j - 2]) / dj;
  }
}

Complex laguerre_recur(const LaguerreQuery& q) {
  if (q.degree == 0) return 1.0;
  Complex l0 = 1.0;
  Complex l1 = 1.0 + q.order - q.argument;
  for (std::size_t j = 2; j <= q.degree; ++j) {
    const double dj = double(j);
    const Complex l = ((2.0 * dj + q.order - 1.0 - q.argument) * l1 - (dj + q.order - 1.0) * l0) / dj;
    l0 = l1;
    l1 = l;
  }
  return l1;
}

void laguerre_shifted_batch(Complex beta, Complex z, std::span<Complex> out) {
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = beta - z;
  for (std::size_t j = 2; j < out.size(); ++j) {
    const double dj = double(j);
    out[j] = ((beta + 1.0 - dj - z) * out[j - 1] - z * out[j - 2]) / dj;
  }
}

Complex laguerre_shifted_recur(std::size_t degree, Complex beta, Complex z) {
  if (degree == 0) return 1.0;
  Complex l0 = 1.0;
  Complex l1 = beta - z;
  for (std::size_t j = 2; j <= degree; ++j) {
    const double dj = double(j);
    const Complex l = ((beta + 1.0 - dj - z) * l1 - z * l0) / dj;
    l0 = l1;
    l1 = l;
  }
  return l1;
}

Complex laguerre_asymptotic(const LaguerreQuery& q, AsymptoticSign sign) {
  const Complex z = q.argument;
  const Complex a = q.order;
  if (z.real() <= 0.0) throw Error(ErrorKind::domain, "laguerre_asymptotic: requires Re(z) > 0");
  if (q.degree == 0) throw Error(ErrorKind::domain, "laguerre_asymptotic: requires degree i >= 1");
  const double i = double(q.degree);
  const Complex root = std::sqrt(z * (i + (a + 1.0) / 2.0));
  const Complex log_i = std::log(i);
  const Complex log_z = log_principal(z);
  if (sign == AsymptoticSign::plus) {
    const Complex lead = std::exp((a / 2.0 - 0.25) * log_i + z / 2.0 - (a / 2.0 + 0.25) * log_z) / std::sqrt(pi);
    return lead * std::cos(2.0 * root - (pi / 2.0) * (a + 0.5));
  }
  // growth branch; the 1/(2√π) normalisation is the classical Perron constant
  const Complex log_v = (a / 2.0 - 0.25) * log_i - z / 2.0 - (a / 2.0 + 0.25) * log_z + 2.0 * root;
  return std::exp(log_v) / (2.0 * std::sqrt(pi));
}

}  // namespace zetakit
