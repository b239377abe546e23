#include "zetakit/zeta.hpp"

#include <array>
#include <cmath>
#include <string>

#include "zetakit/incgamma.hpp"
#include "zetakit/kummer.hpp"

namespace zetakit {

namespace {

// Γ(a, w) / w^a with w = c·x², where the scaled value is x^{2a} e^{-w} F(a, w).
// Returns Γ(a, c x²) / c^a for real c > 0.
Complex scaled_upper(Complex a, double c, Complex x, Complex x_pow) {
  const Complex w = c * x * x;
  const Complex f = upper_gamma_cf_scaled(a, w, 1e-16).value;
  return x_pow * std::exp(-w) * f;
}

void require_x(Complex x, const char* what) {
  if (!(x.real() > std::abs(x.imag())))
    throw Error(ErrorKind::domain, std::string(what) + ": requires Re(x) > |Im(x)|, Theorem 3");
}

}  // namespace

ZetaMethod parse_zeta_method(std::string_view name) {
  if (name == "basic") return ZetaMethod::basic;
  if (name == "general") return ZetaMethod::general;
  if (name == "upsilon") return ZetaMethod::upsilon;
  throw Error(ErrorKind::domain, "unknown zeta method '" + std::string(name) + "'");
}

const char* to_string(ZetaMethod method) noexcept {
  switch (method) {
    case ZetaMethod::basic: return "basic";
    case ZetaMethod::general: return "general";
    case ZetaMethod::upsilon: return "upsilon";
  }
  return "unknown";
}

Complex xi_basic_tail(Complex s, std::size_t from, std::size_t to) {
  Complex sum = 0.0;
  for (std::size_t k = to; k >= from && k >= 1; --k) {
    const double c = double(k * k) * pi;
    sum += scaled_upper(s / 2.0, c, 1.0, 1.0) + scaled_upper((1.0 - s) / 2.0, c, 1.0, 1.0);
    if (k == from) break;
  }
  return s * (1.0 - s) * sum;
}

CompletedZetaValue xi_basic(Complex s, std::size_t K) {
  CompletedZetaValue r;
  // smallest terms first
  r.xi = 1.0 - (K == 0 ? Complex(0.0) : xi_basic_tail(s, 1, K));
  r.terms = K;
  r.tail_bound = std::abs(xi_basic_tail(s, K + 1, K + 1));
  return r;
}

CompletedZetaValue xi_general(Complex s, Complex x, std::size_t K) {
  require_x(x, "xi_general");
  const Complex xs = pow_principal(x, s);
  const Complex xs1 = pow_principal(x, s - 1.0);
  const Complex inv = 1.0 / x;
  auto term = [&](std::size_t k) {
    const double c = double(k * k) * pi;
    return scaled_upper(s / 2.0, c, x, xs) + scaled_upper((1.0 - s) / 2.0, c, inv, xs1);
  };
  Complex sum = 0.0;
  for (std::size_t k = K; k >= 1; --k) sum += term(k);
  CompletedZetaValue r;
  r.xi = (1.0 - s) * xs + s * xs1 + s * (s - 1.0) * sum;
  r.terms = K;
  r.tail_bound = std::abs(s * (s - 1.0) * term(K + 1));
  return r;
}

CompletedZetaValue xi_upsilon(Complex s, Complex x, std::size_t K) {
  require_x(x, "xi_upsilon");
  const Complex factor = (std::pow(2.0, s) - 1.0) * (1.0 - std::pow(2.0, 1.0 - s));
  if (std::abs(factor) < 1e-12)
    throw Error(ErrorKind::division, "xi_upsilon: (2^s-1)(1-2^{1-s}) vanishes at this s");
  const Complex xs = pow_principal(x, s);
  const Complex xs1 = pow_principal(x, s - 1.0);
  const Complex inv = 1.0 / x;
  // second difference over j = 4k+1, 4k+2, 4k+3 of both Υ terms
  auto block = [&](std::size_t k) {
    static constexpr std::array<double, 3> weight = {1.0, -2.0, 1.0};
    Complex b = 0.0;
    for (std::size_t m = 0; m < 3; ++m) {
      const double j = double(4 * k + 1 + m);
      const double c = j * j * pi / 4.0;
      b += weight[m] * (scaled_upper(s / 2.0, c, x, xs) + scaled_upper((1.0 - s) / 2.0, c, inv, xs1));
    }
    return b;
  };
  Complex sum = 0.0;
  for (std::size_t k = K; k-- > 0;) sum += block(k);
  CompletedZetaValue r;
  r.xi = s * (s - 1.0) * sum / factor;
  r.terms = K;
  r.tail_bound = std::abs(s * (s - 1.0) * block(K) / factor);
  return r;
}

Complex zeta_value(Complex s, ZetaMethod method, std::size_t K, Complex x) {
  if (s == Complex(1.0, 0.0)) throw Error(ErrorKind::pole, "zeta_value: pole at s = 1");
  Complex xi;
  switch (method) {
    case ZetaMethod::basic: xi = xi_basic(s, K).xi; break;
    case ZetaMethod::general: xi = xi_general(s, x, K).xi; break;
    case ZetaMethod::upsilon: xi = xi_upsilon(s, x, K).xi; break;
  }
  // s Γ(s/2) = 2 Γ(1 + s/2) removes the s = 0 singularity; 1/Γ vanishes at
  // the trivial zeros
  return xi * pow_principal(pi, s / 2.0) * reciprocal_gamma(1.0 + s / 2.0) / (2.0 * (s - 1.0));
}

Complex hurwitz_tail(Complex s, std::size_t N) {
  if (N == 0) throw Error(ErrorKind::domain, "hurwitz_tail: requires N >= 1");
  if (s == Complex(1.0, 0.0)) throw Error(ErrorKind::pole, "hurwitz_tail: pole at s = 1");
  static constexpr std::array<double, 10> bernoulli = {1.0 / 6,       -1.0 / 30,        1.0 / 42,
                                                        -1.0 / 30,     5.0 / 66,         -691.0 / 2730,
                                                        7.0 / 6,       -3617.0 / 510,    43867.0 / 798,
                                                        -174611.0 / 330};
  const std::size_t M = std::max<std::size_t>(N, 20 + std::size_t(std::ceil(std::abs(s))));
  Complex sum = 0.0;
  for (std::size_t n = M; n-- > N;) sum += pow_principal(double(n), -s);
  const double m = double(M);
  const Complex ms = pow_principal(m, -s);
  sum += m * ms / (s - 1.0) + 0.5 * ms;
  Complex rising = s;  // s(s+1)···(s+2j-2)
  Complex mpow = ms / m;
  double fact = 2.0;  // (2j)!
  for (std::size_t j = 1; j <= bernoulli.size(); ++j) {
    const Complex t = bernoulli[j - 1] / fact * rising * mpow;
    sum += t;
    if (std::abs(t) < 1e-17 * std::abs(sum)) break;
    rising *= (s + double(2 * j - 1)) * (s + double(2 * j));
    mpow /= m * m;
    fact *= double(2 * j + 1) * double(2 * j + 2);
  }
  return sum;
}

double fourier_gamma_residual(Complex s, Complex x, std::size_t K) {
  require_x(x, "fourier_gamma_residual");
  if (s == Complex(0.0, 0.0) || s == Complex(1.0, 0.0))
    throw Error(ErrorKind::domain, "fourier_gamma_residual: requires s not in {0, 1}");
  const Complex a = s / 2.0;
  const Complex b = (1.0 - s) / 2.0;
  Complex lhs = pow_principal(x, s) / s + pow_principal(x, s - 1.0) / (1.0 - s);
  Complex rhs = 0.0;
  const Complex xs1 = pow_principal(x, s - 1.0);
  for (std::size_t z = 1; z <= K; ++z) {
    const double c = double(z * z) * pi;
    lhs += lower_gamma_series(a, c * x * x).value / pow_principal(c, a);
    rhs += scaled_upper(b, c, 1.0 / x, xs1);
  }
  // The lower-gamma sum converges only like Σ z^{-s}. Its tail beyond K is
  // Γ(s/2)π^{-s/2} Σ_{z>K} z^{-s} minus the (negligible) upper-gamma tail.
  Complex tail = gamma(a) * pow_principal(pi, -a) * hurwitz_tail(s, K + 1);
  const Complex xs = pow_principal(x, s);
  for (std::size_t z = K + 1; z <= K + 3; ++z) tail -= scaled_upper(a, double(z * z) * pi, x, xs);
  lhs += tail;
  return std::abs(lhs - rhs);
}

Complex reference_zeta(Complex s) {
  if (s == Complex(1.0, 0.0)) throw Error(ErrorKind::pole, "reference_zeta: pole at s = 1");
  if (!(s.real() > -3.0) || std::abs(s.imag()) > 100.0)
    throw Error(ErrorKind::range, "reference_zeta: outside validated range Re(s) > -3, |Im(s)| <= 100");
  const Complex eta_factor = 1.0 - std::pow(2.0, 1.0 - s);
  if (std::abs(eta_factor) < 1e-8)
    throw Error(ErrorKind::range, "reference_zeta: 1 - 2^{1-s} vanishes near this s");
  const int n = std::min(350, 60 + int(std::ceil(1.5 * std::abs(s.imag()))));
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  Complex sum = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * pow_principal(double(k + 1), -s);
    b = (double(k) + n) * (double(k) - n) * b / ((double(k) + 0.5) * (double(k) + 1.0));
  }
  return sum / d / eta_factor;
}

}  // namespace zetakit
