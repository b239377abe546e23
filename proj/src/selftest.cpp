#include "zetakit/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <vector>

#include "zetakit/approx_zeros.hpp"
#include "zetakit/format.hpp"
#include "zetakit/incgamma.hpp"
#include "zetakit/kummer.hpp"
#include "zetakit/laguerre.hpp"
#include "zetakit/zeta.hpp"

namespace zetakit {

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
double rel1(Complex a, Complex b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

template <class F>
double worst(F&& f) {
  double m = 0.0;
  f([&](double v) { m = std::max(m, std::isnan(v) ? INFINITY : v); });
  return m;
}

CheckResult below(std::string module, std::string name, double measured, double threshold) {
  return {std::move(module), std::move(name), measured, threshold, measured < threshold};
}

// Fitted slope of y against x by least squares.
double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double max_pair_distance(const Eigen::VectorXcd& roots) {
  // every root s must have a partner near 1 - s
  double m = 0.0;
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    double best = INFINITY;
    for (Eigen::Index j = 0; j < roots.size(); ++j) best = std::min(best, std::abs(roots(j) - (1.0 - roots(i))));
    m = std::max(m, best / std::max(1.0, std::abs(roots(i))));
  }
  return m;
}

void numeric_checks(std::vector<CheckResult>& out) {
  out.push_back(below("numeric", "binomial equals falling factorial / k!", worst([](auto note) {
                        for (const Complex a : {Complex(-100.0, 0.0), Complex(37.5, -12.0), Complex(0.5, 2.0),
                                                Complex(-7.25, 60.0), Complex(99.0, 1.0)})
                          for (std::size_t k = 0; k <= 60; k += 6) {
                            Complex ff = 1.0;
                            double fact = 1.0;
                            for (std::size_t j = 0; j < k; ++j) {
                              ff *= a - double(j);
                              fact *= double(j + 1);
                            }
                            if (ff != Complex(0.0)) note(rel(binomial_general(a, k) * fact, ff));
                          }
                      }),
                      1e-13));
  out.push_back(below("numeric", "log_gamma recurrence", worst([](auto note) {
                        for (double x = -4.75; x <= 6.0; x += 0.5)
                          for (double y : {-7.0, -0.5, 0.0, 0.3, 4.0, 25.0}) {
                            const Complex z(x, y);
                            const Complex lhs = log_gamma(z + 1.0);
                            note(std::abs(lhs - log_gamma(z) - log_principal(z)) / std::max(1.0, std::abs(lhs)));
                          }
                      }),
                      1e-12));
  out.push_back(below("numeric", "pow_principal integer powers", worst([](auto note) {
                        for (const Complex z : {Complex(2.0, 1.0), Complex(-3.0, 0.5), Complex(0.1, -0.9), Complex(-2.0, 0.0)})
                          for (int m = -6; m <= 12; ++m) {
                            Complex r = 1.0;
                            for (int j = 0; j < std::abs(m); ++j) r *= z;
                            if (m < 0) r = 1.0 / r;
                            note(rel(pow_principal(z, double(m)), r));
                          }
                      }),
                      1e-13));
}

void laguerre_checks(std::vector<CheckResult>& out) {
  const Complex alphas[] = {-0.5, 0.0, 1.0, 2.7, Complex(3.0, 1.0)};
  const Complex zs[] = {0.5, 1.0, pi, Complex(2.0, -1.0)};
  out.push_back(below("laguerre", "recursion equals explicit sum (i <= 25)", worst([&](auto note) {
                        for (std::size_t i = 0; i <= 25; ++i)
                          for (const Complex a : alphas)
                            for (const Complex z : zs) note(rel1(laguerre_recur({i, a, z}), laguerre_explicit({i, a, z})));
                      }),
                      1e-10));
  out.push_back(below("laguerre", "convolution identity (i <= 15)", worst([](auto note) {
                        const Complex a = 0.7, b = Complex(-0.3, 0.4), x = 1.3, y = Complex(0.6, -0.2);
                        for (std::size_t i = 0; i <= 15; ++i) {
                          Complex sum = 0.0;
                          for (std::size_t j = 0; j <= i; ++j) sum += laguerre_recur({i - j, a, x}) * laguerre_recur({j, b, y});
                          note(rel1(sum, laguerre_recur({i, a + b + 1.0, x + y})));
                        }
                      }),
                      1e-10));
  out.push_back(below("laguerre", "shifted-order consistency (i <= 20)", worst([](auto note) {
                        for (const Complex beta : {Complex(4.0), Complex(-1.5), Complex(2.0, 1.0)})
                          for (const Complex z : {Complex(2.0), Complex(0.3, 0.7)})
                            for (std::size_t i = 0; i <= 20; ++i)
                              note(rel1(laguerre_shifted_recur(i, beta, z), laguerre_explicit({i, beta - double(i), z})));
                      }),
                      1e-10));
  {
    // L_j^{(β-j)}(z) / binomial(β, j) -> e^z; binomial(3, j) = 0 for j > 3, so
    // the law is checked on the non-degenerate neighbour β = 3.5
    const double ratio = std::abs(laguerre_shifted_recur(2000, 3.5, 1.0) / binomial_general(3.5, 2000)) / std::exp(1.0);
    out.push_back(below("laguerre", "growth law L_j^(b-j)(z)/binom(b,j) -> e^z at j=2000", std::abs(ratio - 1.0), 0.02));
  }
  out.push_back(below("laguerre", "asymptotic ratio, -z case, i=1e4",
                      std::abs(std::abs(laguerre_recur({10000, 0.0, -1.0}) /
                                        laguerre_asymptotic({10000, 0.0, 1.0}, AsymptoticSign::minus)) -
                               1.0),
                      0.05));
}

void kummer_checks(std::vector<CheckResult>& out) {
  const Complex as[] = {-4.5, -1.2, 0.7, Complex(2.0, 1.0), 4.9};
  const Complex bs[] = {-3.5, 0.3, 1.7, Complex(2.5, -1.0), 4.2};
  const Complex zs[] = {Complex(-4.0, 1.0), -1.5, 0.8, Complex(2.0, -3.0), 4.5};
  out.push_back(below("kummer", "Kummer transformation", worst([&](auto note) {
                        for (const Complex a : as)
                          for (const Complex b : bs)
                            for (const Complex z : zs)
                              note(rel(kummer_m_series({a, b, z}).value,
                                       std::exp(z) * kummer_m_series({b - a, b, -z}).value));
                      }),
                      1e-10));
  out.push_back(below("kummer", "U reflection", worst([&](auto note) {
                        for (const Complex a : as)
                          for (const Complex b : bs)
                            for (const Complex z : {Complex(0.8), Complex(2.0, -3.0), Complex(4.5), Complex(1.5, 1.0)})
                              note(rel(kummer_u({a, b, z}).value,
                                       pow_principal(z, 1.0 - b) * kummer_u({1.0 + a - b, 2.0 - b, z}).value));
                      }),
                      1e-9));
  {
    const KummerParams p{0.5, 2.5, 1.0};
    const double e1 = rel(kummer_m_laguerre(p, 0.7, 4000).value, kummer_m_series(p).value);
    const double e2 = rel(kummer_u_laguerre({1.0, 0.3, 1.7}, 2.0, 1000).value, kummer_u({1.0, 0.3, 1.7}).value);
    out.push_back(below("kummer", "Laguerre expansions converge to M and U", std::max(e1, e2), 1e-6));
  }
  out.push_back(below("kummer", "polynomial collapse for a = -i", worst([](auto note) {
                        for (std::size_t i = 0; i <= 12; ++i)
                          for (const Complex b : {Complex(2.0), Complex(0.5, 1.0)})
                            for (const Complex z : {Complex(1.5), Complex(-2.0, 0.5)}) {
                              const Complex lag = laguerre_explicit({i, b - 1.0, z}) / binomial_general(double(i) + b - 1.0, i);
                              note(rel1(kummer_m_series({-double(i), b, z}).value, lag));
                            }
                      }),
                      1e-12));
}

void incgamma_checks(std::vector<CheckResult>& out) {
  out.push_back(below("incgamma", "complementarity gamma + Gamma = Gamma(s)", worst([](auto note) {
                        for (const Complex s : {Complex(0.2), Complex(0.5, 2.0), Complex(3.3, -1.0), Complex(-2.5, 1.0), Complex(8.0, 6.0)})
                          for (const Complex z : {Complex(0.4), Complex(1.0, 1.0), Complex(3.0, -2.0), Complex(6.0), Complex(12.0, 3.0)})
                            note(rel(lower_gamma_series(s, z).value + upper_gamma_cf(s, z).value, gamma(s)));
                      }),
                      1e-11));
  out.push_back(below("incgamma", "closed-form q equals recursion (k <= 40)", worst([](auto note) {
                        for (const auto& [s, z] : {std::pair{Complex(0.3), Complex(5.0)}, std::pair{Complex(1.5, -2.0), Complex(2.0, 1.0)},
                                                   std::pair{Complex(-0.7, 0.4), Complex(0.5, -0.3)}}) {
                          const auto rec = convergents_recursion(s, z, 2 * 40 + 1);
                          for (std::size_t k = 0; k <= 40; ++k) {
                            const auto [qe, qo] = convergent_q_closed(k, s, z);
                            note(rel(qe, rec[2 * k].q));
                            note(rel(qo, rec[2 * k + 1].q));
                          }
                        }
                      }),
                      1e-12));
  out.push_back(below("incgamma", "convergent sum equals p/q", worst([](auto note) {
                        for (const auto& [s, z] : {std::pair{Complex(0.5), Complex(3.0)}, std::pair{Complex(1.5, 2.0), Complex(1.0, -0.5)}}) {
                          const auto rec = convergents_recursion(s, z, 41);
                          for (std::size_t k = 0; k <= 20; ++k) {
                            note(rel(upper_gamma_convergent_sum(s, z, k), rec[2 * k + 1].p / rec[2 * k + 1].q));
                            note(rel(upper_gamma_convergent_sum(s, z, k, ConvergentParity::even), k == 0 ? 0.0 : rec[2 * k].p / rec[2 * k].q));
                          }
                        }
                      }),
                      1e-12));
  {
    const Complex s = 0.4, z = 2.0;
    const Complex ref = upper_gamma_cf_scaled(s, z).value;
    const double e = std::max({rel(upper_gamma_convergent_sum(s, z, 60), ref),
                               rel(upper_gamma_laguerre_limit(s, z, 80, ConvergentParity::even), ref),
                               rel(upper_gamma_laguerre_limit(s, z, 80, ConvergentParity::odd), ref),
                               rel(upper_gamma_laguerre_series(s, z, 5.0, 2000).value / std::exp(s * std::log(z) - z), ref)});
    out.push_back(below("incgamma", "four upper-gamma paths agree", e, 1e-8));
  }
}

void zeta_checks(std::vector<CheckResult>& out) {
  {
    double worst_dev = 0.0;
    for (const Complex s : {Complex(3.0), Complex(0.5, 10.0)}) {
      std::vector<double> x, y;
      for (std::size_t K = 1; K <= 4; ++K) {
        x.push_back(double(K * K));
        y.push_back(std::log(std::abs(xi_basic_tail(s, K + 1, 8))));
      }
      worst_dev = std::max(worst_dev, std::abs(slope(x, y) / -pi - 1.0));
    }
    out.push_back(below("zeta", "truncation decay slope vs K^2 is -pi within 20%", worst_dev, 0.2));
  }
  out.push_back(below("zeta", "functional-equation symmetry", worst([](auto note) {
                        for (const Complex s : {Complex(0.3, 4.0), Complex(2.0, -7.0), Complex(-1.0, 15.0), Complex(0.5, 25.0)})
                          note(std::abs(xi_basic(s).xi - xi_basic(1.0 - s).xi));
                      }),
                      1e-13));
  const Complex grid[] = {Complex(-1.0, 5.0), Complex(0.5, 10.0), Complex(2.0, 20.0), Complex(3.0), Complex(0.2, 0.7)};
  out.push_back(below("zeta", "x-independence", worst([&](auto note) {
                        for (const Complex s : grid)
                          for (const Complex x : {Complex(1.05), Complex(1.2), Complex(1.3, 0.2)})
                            note(std::abs(xi_general(s, x, 6).xi - xi_basic(s, 6).xi));
                      }),
                      1e-9));
  out.push_back(below("zeta", "upsilon representation agreement", worst([&](auto note) {
                        for (const Complex s : grid) note(std::abs(xi_upsilon(s, 1.0, 6).xi - xi_basic(s, 6).xi));
                      }),
                      1e-8));
  out.push_back(below("zeta", "oracle agreement on sigma in [-1,3], |t| <= 30", worst([](auto note) {
                        for (double sigma = -1.0; sigma <= 3.0; sigma += 2.0 / 3.0)
                          for (double t = 0.0; t <= 30.0; t += 5.0) {
                            const Complex s(sigma, t);
                            if (std::abs(s - 1.0) < 1e-9) continue;
                            note(rel(zeta_value(s, ZetaMethod::basic, 5), reference_zeta(s)));
                          }
                      }),
                      1e-10));
}

void approx_checks(std::vector<CheckResult>& out) {
  {
    double bad = 0.0;
    for (const double d : {1.0, 2.5, 5.0})
      for (std::size_t n = 1; n <= 40; ++n)
        if (approximant_polynomial({d, n}).degree() != 2 * n) bad += 1.0;
    out.push_back(below("approx-zeros", "degree law 2n (n <= 40)", bad, 0.5));
  }
  const RootSet rs = classify_roots(find_roots(approximant_polynomial({5.0, 25})), {5.0, 25});
  out.push_back(below("approx-zeros", "root symmetry under s -> 1-s", max_pair_distance(rs.roots), 1e-8));
  {
    const Complex target(0.5, 14.134725);
    double prev = INFINITY, viol = 0.0;
    for (const std::size_t n : {10, 15, 20, 25}) {
      const RootSet r = find_roots(approximant_polynomial({5.0, n}));
      double best = INFINITY;
      for (Eigen::Index i = 0; i < r.roots.size(); ++i) best = std::min(best, std::abs(r.roots(i) - target));
      if (!(best < prev)) viol += 1.0;
      prev = best;
    }
    out.push_back(below("approx-zeros", "Hurwitz trend toward 1/2+14.1347i", viol, 0.5));
  }
  {
    double dev = 0.0;
    for (Eigen::Index i = 0; i < rs.roots.size(); ++i) {
      const Complex s = rs.roots(i);
      if (s.real() > -11.0 && s.real() <= 10.0 && std::abs(s.imag()) > 2.0 && std::abs(s.imag()) < 30.0)
        dev = std::max(dev, std::abs(s.real() - 0.5));
    }
    out.push_back(below("approx-zeros", "in-strip roots on critical line (2<|Im|<30)", dev, 0.05));
  }
}

void cli_checks(std::vector<CheckResult>& out) {
  double bad = 0.0;
  for (const double v : {0.1, 1.0 / 3.0, pi, 1e-300, 6.02214076e23, -2.5e-17})
    if (parse_double(format_double(v)) != v) bad += 1.0;
  out.push_back(below("cli", "round-trip number formatting", bad, 0.5));
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  std::vector<CheckResult> out;
  auto guarded = [&](const char* module, auto&& fn) {
    try {
      fn(out);
    } catch (const std::exception& e) {
      out.push_back({module, std::string("exception: ") + e.what(), INFINITY, 0.0, false});
    }
  };
  guarded("numeric", numeric_checks);
  guarded("laguerre", laguerre_checks);
  guarded("kummer", kummer_checks);
  guarded("incgamma", incgamma_checks);
  guarded("zeta", zeta_checks);
  guarded("approx-zeros", approx_checks);
  guarded("cli", cli_checks);
  return out;
}

void print_selftest(const std::vector<CheckResult>& results, std::ostream& out) {
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(13) << r.module << std::setw(50) << r.name
        << " measured " << format_double(r.measured) << " < " << format_double(r.threshold) << '\n';
    passed += r.pass;
  }
  out << passed << '/' << results.size() << " checks passed\n";
}

}  // namespace zetakit
