#include "zetakit/kummer.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zetakit/laguerre.hpp"

namespace zetakit {

namespace {

bool is_integer(Complex z) { return z.imag() == 0.0 && z.real() == std::floor(z.real()); }

}  // namespace

SeriesResult kummer_m_series(const KummerParams& p, double tol) {
  if (is_nonpositive_integer(p.b)) throw Error(ErrorKind::pole, "kummer_m_series: b is a non-positive integer");
  if (!(tol > 0.0)) throw Error(ErrorKind::domain, "kummer_m_series: requires tol > 0");

  SeriesResult r;
  Complex term = 1.0;
  Complex sum = 1.0;
  double largest = 1.0;
  int quiet = 0;
  for (std::size_t i = 0; i < kummer_max_terms; ++i) {
    const double di = double(i);
    term *= (p.a + di) * p.z / ((p.b + di) * (di + 1.0));
    sum += term;
    largest = std::max(largest, std::abs(term));
    if (term == Complex(0.0, 0.0)) {
      // a is a non-positive integer: the series is a polynomial
      r.value = sum;
      r.terms_used = i + 1;
      r.tail_estimate = 0.0;
      r.cancellation_warning = largest > 1e8 * std::abs(sum);
      return r;
    }
    quiet = std::abs(term) < tol * std::abs(sum) ? quiet + 1 : 0;
    if (quiet == 3) {
      r.value = sum;
      r.terms_used = i + 2;
      r.tail_estimate = std::abs(term);
      r.cancellation_warning = largest > 1e8 * std::abs(sum);
      return r;
    }
  }
  throw Error(ErrorKind::convergence, "kummer_m_series: no convergence after 1e5 terms");
}

SeriesResult kummer_u(const KummerParams& p, double tol) {
  if (is_integer(p.b))
    throw Error(ErrorKind::domain,
                "kummer_u: requires non-integer b; use the eps-offset policy (kummer_u_integer_b)");
  const Complex c1 = gamma_ratio({1.0 - p.b}, {1.0 - p.b + p.a});
  const Complex c2 = gamma_ratio({p.b - 1.0}, {p.a});

  SeriesResult r;
  double largest = 0.0;
  if (c1 != Complex(0.0, 0.0)) {
    const SeriesResult m1 = kummer_m_series(p, tol);
    r.value += c1 * m1.value;
    largest = std::abs(c1 * m1.value);
    r.terms_used += m1.terms_used;
    r.tail_estimate += std::abs(c1) * m1.tail_estimate;
    r.cancellation_warning = r.cancellation_warning || m1.cancellation_warning;
  }
  if (c2 != Complex(0.0, 0.0)) {
    const SeriesResult m2 = kummer_m_series({p.a - p.b + 1.0, 2.0 - p.b, p.z}, tol);
    const Complex w = c2 * pow_principal(p.z, 1.0 - p.b);
    r.value += w * m2.value;
    largest = std::max(largest, std::abs(w * m2.value));
    r.terms_used += m2.terms_used;
    r.tail_estimate += std::abs(w) * m2.tail_estimate;
    r.cancellation_warning = r.cancellation_warning || m2.cancellation_warning;
  }
  // the two terms nearly cancel when U is small next to them
  if (largest > 1e6 * std::abs(r.value)) r.cancellation_warning = true;
  return r;
}

SeriesResult kummer_u_integer_b(const KummerParams& p, double tol, double eps) {
  const SeriesResult lo = kummer_u({p.a, p.b - eps, p.z}, tol);
  const SeriesResult hi = kummer_u({p.a, p.b + eps, p.z}, tol);
  SeriesResult r;
  r.value = 0.5 * (lo.value + hi.value);
  r.terms_used = lo.terms_used + hi.terms_used;
  r.tail_estimate = std::max(lo.tail_estimate, hi.tail_estimate) + 0.5 * std::abs(hi.value - lo.value);
  r.cancellation_warning = lo.cancellation_warning || hi.cancellation_warning;
  return r;
}

SeriesResult kummer_m_laguerre(const KummerParams& p, Complex beta, std::size_t n_terms) {
  if (!((p.b - p.a).real() > 0.0))
    throw Error(ErrorKind::domain, "kummer_m_laguerre: requires Re(b-a) > 0, Theorem 1");
  const Complex pre = gamma_ratio({p.b, p.b - p.a - beta}, {p.b - p.a, p.b - beta});

  std::vector<Complex> lag(n_terms + 1);
  laguerre_shifted_batch(beta, p.z, lag);

  SeriesResult r;
  Complex ratio = 1.0;  // (-1)^i binom(-a,i)/binom(beta-b,i)
  Complex sum = 0.0;
  Complex last = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i <= n_terms; ++i) {
    if (i > 0) {
      const double di = double(i);
      const Complex den = beta - p.b - di + 1.0;
      if (den == Complex(0.0, 0.0))
        throw Error(ErrorKind::division, "kummer_m_laguerre: binomial(beta-b, i) vanishes");
      ratio *= -(-p.a - di + 1.0) / den;
    }
    if (ratio == Complex(0.0, 0.0)) break;
    last = ratio * lag[i];
    sum += last;
    used = i + 1;
  }
  r.value = pre * sum;
  r.terms_used = used;
  r.tail_estimate = std::abs(pre * last);
  return r;
}

SeriesResult kummer_u_laguerre(const KummerParams& p, Complex alpha, std::size_t n_terms) {
  if (!((alpha - 2.0 * p.b).real() > -2.5))
    throw Error(ErrorKind::domain, "kummer_u_laguerre: requires Re(alpha-2b) > -5/2, Theorem 1");
  if (is_nonpositive_integer(2.0 + alpha - p.b))
    throw Error(ErrorKind::domain, "kummer_u_laguerre: requires (1+alpha-b)! finite");
  const Complex pre = gamma_ratio({2.0 + alpha - p.b}, {2.0 + alpha - p.b + p.a});

  std::vector<Complex> lag(n_terms + 1);
  laguerre_recur_batch(alpha, p.z, lag);

  SeriesResult r;
  Complex ratio = 1.0;  // binom(-a,i)/binom(b-a-alpha-2,i)
  Complex sum = 0.0;
  Complex last = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i <= n_terms; ++i) {
    if (i > 0) {
      const double di = double(i);
      const Complex den = p.b - p.a - alpha - 2.0 - di + 1.0;
      if (den == Complex(0.0, 0.0))
        throw Error(ErrorKind::division, "kummer_u_laguerre: binomial(b-a-alpha-2, i) vanishes");
      ratio *= (-p.a - di + 1.0) / den;
    }
    if (ratio == Complex(0.0, 0.0)) break;
    last = ratio * lag[i];
    sum += last;
    used = i + 1;
  }
  r.value = pre * sum;
  r.terms_used = used;
  r.tail_estimate = std::abs(pre * last);
  return r;
}

SeriesResult exp_laguerre_partial(Complex t, Complex alpha, Complex z, std::size_t n_terms) {
  if (!(t.real() > -0.5)) throw Error(ErrorKind::domain, "exp_laguerre_partial: requires Re(t) > -1/2");
  const Complex q = t / (1.0 + t);
  const Complex pre = pow_principal(1.0 + t, -alpha - 1.0);

  std::vector<Complex> lag(n_terms + 1);
  laguerre_recur_batch(alpha, z, lag);

  Complex sum = 0.0;
  Complex qi = 1.0;
  Complex last = 0.0;
  for (std::size_t i = 0; i <= n_terms; ++i) {
    last = lag[i] * qi;
    sum += last;
    qi *= q;
  }
  SeriesResult r;
  r.value = pre * sum;
  r.terms_used = n_terms + 1;
  r.tail_estimate = std::abs(pre * last);
  return r;
}

}  // namespace zetakit
