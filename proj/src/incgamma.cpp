#include "zetakit/incgamma.hpp"

#include <algorithm>
#include <cmath>

#include "zetakit/kummer.hpp"
#include "zetakit/laguerre.hpp"

namespace zetakit {

namespace {

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

void check_denominator(Complex v, double scale, const char* what) {
  if (!(std::abs(v) >= 1e-280 * std::max(1.0, scale)))
    throw Error(ErrorKind::division, std::string(what) + ": Laguerre denominator vanishes");
}

}  // namespace

SeriesResult lower_gamma_series(Complex s, Complex z, double tol) {
  if (is_nonpositive_integer(s)) throw Error(ErrorKind::pole, "lower_gamma_series: s is a non-positive integer");
  if (z == Complex(0.0, 0.0)) {
    if (s.real() > 0.0) return {};
    throw Error(ErrorKind::domain, "lower_gamma_series: z = 0 requires Re(s) > 0");
  }
  SeriesResult m = kummer_m_series({1.0, s + 1.0, z}, tol);
  const Complex pre = std::exp(s * log_principal(z) - z) / s;
  m.value *= pre;
  m.tail_estimate *= std::abs(pre);
  m.cancellation_warning = m.cancellation_warning || std::abs(z) > 30.0;
  return m;
}

namespace {

// Raw continued fraction for Γ(s,z)/(z^s e^{-z}).
SeriesResult continued_fraction(Complex s, Complex z, double tol) {
  // level k-1 and k of numerator and denominator
  Complex p0 = 0.0, p1 = 1.0;
  Complex q0 = 1.0, q1 = z;
  Complex prev = p1 / q1;
  int quiet = 0;
  std::size_t settled = 0;  // first level within 1e-13, for the noise-floor guard
  for (std::size_t k = 2; k <= cf_max_levels; ++k) {
    Complex a, b;
    if (k % 2 == 0) {
      a = double(k / 2) - s;
      b = 1.0;
    } else {
      a = double((k - 1) / 2);
      b = z;
    }
    const Complex p = a * p0 + b * p1;
    const Complex q = a * q0 + b * q1;
    p0 = p1;
    p1 = p;
    q0 = q1;
    q1 = q;
    if (k % cf_rescale_every == 0) {
      const double m = std::max({std::abs(p0), std::abs(p1), std::abs(q0), std::abs(q1)});
      if (m > 0.0) {
        p0 /= m;
        p1 /= m;
        q0 /= m;
        q1 /= m;
      }
    }
    if (q1 == Complex(0.0, 0.0)) continue;  // reported by skipping, never divided
    const Complex cur = p1 / q1;
    const double diff = std::abs(cur - prev);
    prev = cur;
    quiet = diff < tol * std::abs(cur) ? quiet + 1 : 0;
    if (!settled && diff < 1e-13 * std::abs(cur)) settled = k;
    // past twice the settling level the differences are rounding noise
    if (quiet == 2 || (settled && k > 2 * settled + 20)) {
      SeriesResult r;
      r.value = cur;
      r.terms_used = k;
      r.tail_estimate = diff;
      return r;
    }
  }
  throw Error(ErrorKind::convergence, "upper_gamma_cf: no convergence after 1e4 levels");
}

// The fraction loses digits roughly like Γ(s)/γ(s,z) when Re(s) exceeds |z|.
bool cf_ill_conditioned(Complex s, Complex z) { return s.real() > std::abs(z) + 2.0; }

}  // namespace

SeriesResult upper_gamma_cf_scaled(Complex s, Complex z, double tol) {
  if (!(z.real() > 0.0)) throw Error(ErrorKind::domain, "upper_gamma_cf: requires Re(z) > 0");
  if (!cf_ill_conditioned(s, z)) return continued_fraction(s, z, tol);
  SeriesResult r = lower_gamma_series(s, z, tol);
  const Complex inv = std::exp(z - s * log_principal(z));
  r.value = (gamma(s) - r.value) * inv;
  r.tail_estimate *= std::abs(inv);
  r.complemented = true;
  return r;
}

SeriesResult upper_gamma_cf(Complex s, Complex z, double tol) {
  SeriesResult r = upper_gamma_cf_scaled(s, z, tol);
  const Complex pre = std::exp(s * log_principal(z) - z);
  r.value *= pre;
  r.tail_estimate *= std::abs(pre);
  return r;
}

std::vector<ConvergentPair> convergents_recursion(Complex s, Complex z, std::size_t levels) {
  std::vector<ConvergentPair> out;
  out.push_back({0.0, 1.0, 0});
  if (levels == 0) return out;
  out.push_back({1.0, z, 1});
  for (std::size_t k = 2; k <= levels; ++k) {
    const Complex a = (k % 2 == 0) ? Complex(double(k / 2)) - s : Complex(double((k - 1) / 2));
    const Complex b = (k % 2 == 0) ? Complex(1.0) : z;
    out.push_back({a * out[k - 2].p + b * out[k - 1].p, a * out[k - 2].q + b * out[k - 1].q, k});
  }
  return out;
}

std::pair<Complex, Complex> convergent_q_closed(std::size_t k, Complex s, Complex z) {
  const double log_fact = std::lgamma(double(k) + 1.0);
  const Complex le = laguerre_recur({k, -s, -z});
  const Complex lo = laguerre_recur({k, 1.0 - s, -z});
  const Complex even = std::exp(log_fact) * le;
  const Complex odd = std::exp(log_fact) * z * lo;
  if (!finite(even) || !finite(odd))
    throw Error(ErrorKind::overflow, "convergent_q_closed: k! L_k exceeds double range");
  return {even, odd};
}

Complex upper_gamma_convergent_sum(Complex s, Complex z, std::size_t k, ConvergentParity parity) {
  if (!(z.real() > 0.0)) throw Error(ErrorKind::domain, "upper_gamma_convergent_sum: requires Re(z) > 0");
  std::vector<Complex> lag(k + 1);
  Complex binom = 1.0;  // binom(i-s, i)
  if (parity == ConvergentParity::odd) {
    laguerre_recur_batch(1.0 - s, -z, lag);
    double scale = 1.0;
    Complex sum = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
      binom *= (double(i) - s) / double(i);
      scale = std::max(scale, std::abs(lag[i]));
      check_denominator(lag[i - 1], scale, "upper_gamma_convergent_sum");
      check_denominator(lag[i], scale, "upper_gamma_convergent_sum");
      sum += binom / (lag[i - 1] * lag[i]);
    }
    return (1.0 - sum) / z;
  }
  laguerre_recur_batch(-s, -z, lag);
  double scale = 1.0;
  Complex sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0) binom *= (double(i) - s) / double(i);
    scale = std::max(scale, std::abs(lag[i + 1]));
    check_denominator(lag[i], scale, "upper_gamma_convergent_sum");
    check_denominator(lag[i + 1], scale, "upper_gamma_convergent_sum");
    sum += binom / (double(i + 1) * lag[i] * lag[i + 1]);
  }
  return sum;
}

Complex upper_gamma_laguerre_limit(Complex s, Complex z, std::size_t k, ConvergentParity variant) {
  if (z == Complex(0.0, 0.0)) throw Error(ErrorKind::domain, "upper_gamma_laguerre_limit: requires z != 0");
  if (k == 0) throw Error(ErrorKind::domain, "upper_gamma_laguerre_limit: requires k >= 1");
  const std::size_t top = (k + 1) / 2;
  Complex num = 0.0;
  if (variant == ConvergentParity::even) {
    for (std::size_t i = 1; i <= top; ++i) {
      const Complex l = laguerre_recur({k - 2 * i + 1, 2.0 * double(i) - s, -z});
      num += l * binomial_general(s - 1.0, i - 1) / binomial_general(double(k) - 1.0, i - 1);
    }
    const Complex den = double(k) * laguerre_recur({k, -s, -z});
    if (den == Complex(0.0, 0.0))
      throw Error(ErrorKind::division, "upper_gamma_laguerre_limit: k L_k^(-s)(-z) vanishes");
    return num / den;
  }
  for (std::size_t i = 1; i <= top; ++i) {
    const Complex l = laguerre_recur({k - 2 * i + 1, 2.0 * double(i) + 1.0 - s, -z});
    num += l * binomial_general(s - 1.0, i) / binomial_general(double(k), i);
  }
  const Complex den = z * laguerre_recur({k, 1.0 - s, -z});
  if (den == Complex(0.0, 0.0))
    throw Error(ErrorKind::division, "upper_gamma_laguerre_limit: z L_k^(1-s)(-z) vanishes");
  return 1.0 / z + num / den;
}

SeriesResult upper_gamma_laguerre_series(Complex s, Complex z, Complex alpha, std::size_t n_terms) {
  if (!((s - alpha / 2.0).real() < 0.25))
    throw Error(ErrorKind::domain, "upper_gamma_laguerre_series: requires Re(s - alpha/2) < 1/4, Theorem 1");
  std::vector<Complex> lag(n_terms + 1);
  laguerre_recur_batch(alpha, z, lag);
  const Complex c = alpha - s;
  Complex binom = 1.0;  // binom(k+1+c, k+1)
  Complex sum = 0.0;
  Complex last = 0.0;
  for (std::size_t k = 0; k <= n_terms; ++k) {
    const double m = double(k + 1);
    binom *= (c + m) / m;
    if (binom == Complex(0.0, 0.0))
      throw Error(ErrorKind::division, "upper_gamma_laguerre_series: binomial(k+1+alpha-s, k+1) vanishes");
    last = lag[k] / (m * binom);
    sum += last;
  }
  const Complex pre = std::exp(s * log_principal(z) - z);
  SeriesResult r;
  r.value = pre * sum;
  r.terms_used = n_terms + 1;
  r.tail_estimate = std::abs(pre * last);
  return r;
}

}  // namespace zetakit
