#include "zetakit/approx_zeros.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <json.hpp>

#include "zetakit/format.hpp"
#include "zetakit/incgamma.hpp"
#include "zetakit/laguerre.hpp"

namespace zetakit {

namespace {

using Poly = Eigen::VectorXcd;

Poly constant(Complex c) {
  Poly p(1);
  p(0) = c;
  return p;
}

Poly linear(Complex c0, Complex c1) {
  Poly p(2);
  p << c0, c1;
  return p;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r = Poly::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) r(i + j) += a(i) * b(j);
  return r;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r = Poly::Zero(std::max(a.size(), b.size()));
  r.head(a.size()) += a;
  r.head(b.size()) += b;
  return r;
}

// p(-u)
Poly mirror(Poly p) {
  for (Eigen::Index i = 1; i < p.size(); i += 2) p(i) = -p(i);
  return p;
}

// p(u) + p(-u), odd part exactly zero
Poly symmetrize(const Poly& p) {
  Poly r = 2.0 * p;
  for (Eigen::Index i = 1; i < r.size(); i += 2) r(i) = 0.0;
  return r;
}

Poly drop_odd(Poly p) {
  for (Eigen::Index i = 1; i < p.size(); i += 2) p(i) = 0.0;
  return p;
}

using Wide = boost::multiprecision::cpp_bin_float_100;
using WidePoly = std::vector<Wide>;

WidePoly wmul(const WidePoly& a, const WidePoly& b) {
  WidePoly r(a.size() + b.size() - 1, Wide(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void wadd(WidePoly& a, const WidePoly& b, const Wide& scale) {
  if (a.size() < b.size()) a.resize(b.size(), Wide(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
}

// a_k = Σ_z e^{-z²π} L_k^{(Δ-1/2)}(z²π) / (k+1)
WidePoly wide_coefficients(std::size_t n, const Wide& delta, std::size_t z_max) {
  const Wide alpha = delta - Wide(0.5);
  const Wide wpi = boost::math::constants::pi<Wide>();
  WidePoly a(n, Wide(0));
  for (std::size_t z = z_max; z >= 1; --z) {
    const Wide w = Wide(z * z) * wpi;
    const Wide e = exp(-w);
    Wide l0 = 1, l1 = 1 + alpha - w;
    a[0] += e;
    if (n > 1) a[1] += e * l1;
    for (std::size_t k = 1; k + 1 < n; ++k) {
      const Wide l2 = ((Wide(2 * k + 1) + alpha - w) * l1 - (Wide(k) + alpha) * l0) / Wide(k + 1);
      l0 = l1;
      l1 = l2;
      a[k + 1] += e * l2;
    }
  }
  for (std::size_t k = 0; k < n; ++k) a[k] /= Wide(k + 1);
  return a;
}

// Same construction as the double reference: B+ B- - s(1-s) Σ a_k (G_k B- mirrored and summed), in u = s - 1/2.
WidePoly wide_approximant_polynomial(std::size_t n, const Wide& delta, std::size_t z_max) {
  const WidePoly a = wide_coefficients(n, delta, z_max);
  const Wide c = Wide(0.25) + delta;
  auto factor = [&](std::size_t j, int sign) {
    return WidePoly{(c + Wide(j)) / Wide(j + 1), Wide(sign) / Wide(2 * (j + 1))};
  };
  WidePoly bp{Wide(1)}, bm{Wide(1)};
  for (std::size_t j = 0; j < n; ++j) {
    bp = wmul(bp, factor(j, 1));
    bm = wmul(bm, factor(j, -1));
  }
  WidePoly g{Wide(1)};
  WidePoly weighted{a[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    g = wmul(g, factor(k + 1, 1));
    wadd(weighted, g, a[k]);
  }
  WidePoly s_sum = wmul(weighted, bm);
  for (std::size_t i = 0; i < s_sum.size(); ++i) s_sum[i] = (i % 2) ? Wide(0) : Wide(2) * s_sum[i];
  WidePoly out = wmul(bp, bm);
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = 0;
  wadd(out, wmul(WidePoly{Wide(0.25), Wide(0), Wide(-1)}, s_sum), Wide(-1));
  return out;
}

void check_degree(std::size_t n, const char* what) {
  if (n > approximant_max_n)
    throw Error(ErrorKind::degree_cap, std::string(what) + ": degree control " + std::to_string(n) +
                                           " exceeds cap " + std::to_string(approximant_max_n));
  if (n == 0) throw Error(ErrorKind::domain, std::string(what) + ": requires n >= 1");
}

// p(z)/p'(z), through the reversed polynomial when |z| > 1
Complex newton_ratio(const Poly& a, Complex z, Complex* value = nullptr) {
  const Eigen::Index n = a.size() - 1;
  if (std::abs(z) <= 1.0) {
    Complex p = a(n), dp = 0.0;
    for (Eigen::Index i = n; i-- > 0;) {
      dp = dp * z + p;
      p = p * z + a(i);
    }
    if (value) *value = p;
    if (p == Complex(0.0)) return 0.0;
    return p / dp;
  }
  const Complex y = 1.0 / z;
  Complex r = a(0), dr = 0.0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    dr = dr * y + r;
    r = r * y + a(i);
  }
  if (value) *value = r * std::pow(z, double(n));
  if (r == Complex(0.0)) return 0.0;
  return z / (double(n) - y * dr / r);
}

// relative backward residual |p(z)| / Σ|a_i||z|^i, in log space
double relative_residual(const Poly& a, Complex z) {
  const Eigen::Index n = a.size() - 1;
  const double az = std::abs(z);
  if (az <= 1.0) {
    Complex p = a(n);
    double s = std::abs(a(n));
    for (Eigen::Index i = n; i-- > 0;) {
      p = p * z + a(i);
      s = s * az + std::abs(a(i));
    }
    return s > 0 ? std::abs(p) / s : 0.0;
  }
  const Complex y = 1.0 / z;
  const double ay = 1.0 / az;
  Complex r = a(0);
  double s = std::abs(a(0));
  for (Eigen::Index i = 1; i <= n; ++i) {
    r = r * y + a(i);
    s = s * ay + std::abs(a(i));
  }
  return s > 0 ? std::abs(r) / s : 0.0;
}

std::vector<Complex> initial_points(const Poly& a, std::mt19937_64& rng) {
  const Eigen::Index n = a.size() - 1;
  std::vector<std::pair<double, double>> pts;
  for (Eigen::Index i = 0; i <= n; ++i)
    if (a(i) != Complex(0.0)) pts.emplace_back(double(i), std::log(std::abs(a(i))));
  // upper convex hull of (i, log|a_i|)
  std::vector<std::pair<double, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& q = hull.back();
      const double cross = (q.first - o.first) * (p.second - o.second) - (q.second - o.second) * (p.first - o.first);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  std::uniform_real_distribution<double> jitter(0.0, 1.0);
  std::vector<Complex> z;
  z.reserve(std::size_t(n));
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int m = int(hull[h + 1].first - hull[h].first);
    const double r = std::exp((hull[h].second - hull[h + 1].second) / m);
    const double offset = 2.0 * pi * jitter(rng) / m;
    for (int j = 0; j < m; ++j) z.push_back(std::polar(r, 2.0 * pi * j / m + offset + 0.4));
  }
  return z;
}

struct AberthResult {
  std::vector<Complex> roots;
  std::size_t sweeps = 0;
  bool converged = true;
};

AberthResult aberth(const Poly& a, std::size_t max_sweeps, std::mt19937_64& rng) {
  AberthResult out;
  out.roots = initial_points(a, rng);
  auto& z = out.roots;
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  constexpr double eps = 0x1p-50;
  for (std::size_t sweep = 1; sweep <= max_sweeps; ++sweep) {
    out.sweeps = sweep;
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Complex ratio = newton_ratio(a, z[i]);
      if (ratio == Complex(0.0)) {
        done[i] = true;
        continue;
      }
      Complex sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const Complex w = ratio / (1.0 - ratio * sum);
      z[i] -= w;
      if (std::abs(w) <= eps * std::abs(z[i])) done[i] = true;
      else all = false;
    }
    if (all) return out;
  }
  out.converged = std::all_of(done.begin(), done.end(), [](bool d) { return d; });
  return out;
}

Complex newton_polish(const Poly& a, Complex z) {
  double best = relative_residual(a, z);
  for (int it = 0; it < 5 && best > 0.0; ++it) {
    const Complex next = z - newton_ratio(a, z);
    const double r = relative_residual(a, next);
    if (!(r < best)) break;
    z = next;
    best = r;
  }
  return z;
}

}  // namespace

ApproximantVariant parse_variant(std::string_view name) {
  if (name == "laguerre" || name == "laguerre-series") return ApproximantVariant::laguerre_series;
  if (name == "upsilon") return ApproximantVariant::upsilon;
  if (name == "cf") return ApproximantVariant::cf;
  throw ParseError("unknown variant '" + std::string(name) + "'");
}

const char* to_string(ApproximantVariant v) noexcept {
  switch (v) {
    case ApproximantVariant::laguerre_series: return "laguerre";
    case ApproximantVariant::upsilon: return "upsilon";
    case ApproximantVariant::cf: return "cf";
  }
  return "unknown";
}

const char* to_string(RootClass c) noexcept {
  switch (c) {
    case RootClass::unclassified: return "unclassified";
    case RootClass::on_critical_line: return "on-critical-line";
    case RootClass::off_line: return "off-line";
    case RootClass::outside_strip: return "outside-strip";
    case RootClass::prefactor_zero: return "prefactor-zero";
  }
  return "unknown";
}

RootClass parse_root_class(std::string_view name) {
  for (RootClass c : {RootClass::unclassified, RootClass::on_critical_line, RootClass::off_line,
                      RootClass::outside_strip, RootClass::prefactor_zero})
    if (name == to_string(c)) return c;
  throw ParseError("unknown root class '" + std::string(name) + "'");
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "csv") return ExportFormat::csv;
  if (name == "json") return ExportFormat::json;
  if (name == "gnuplot" || name == "gp") return ExportFormat::gnuplot;
  throw ParseError("unknown export format '" + std::string(name) + "'");
}

Complex PolynomialC::operator()(Complex s) const {
  const Complex v = s - center;
  Complex r = 0.0;
  for (Eigen::Index i = coeffs.size(); i-- > 0;) r = r * v + coeffs(i);
  return r;
}

void PolynomialC::trim(double rel) {
  if (coeffs.size() == 0) return;
  const double m = coeffs.cwiseAbs().maxCoeff();
  Eigen::Index n = coeffs.size();
  while (n > 1 && std::abs(coeffs(n - 1)) < rel * m) --n;
  coeffs.conservativeResize(n);
}

Eigen::VectorXcd approximant_coefficients(const ApproximantSpec& spec) {
  if (spec.z_max < 3) throw Error(ErrorKind::domain, "approximant_coefficients: requires z_max >= 3");
  if (!(spec.delta > 0.0)) throw Error(ErrorKind::domain, "approximant_coefficients: requires delta > 0");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(Eigen::Index(spec.n));
  std::vector<Complex> lag(spec.n);
  for (std::size_t z = spec.z_max; z >= 1; --z) {
    const double w = double(z * z) * pi;
    laguerre_recur_batch(spec.delta - 0.5, w, lag);
    for (std::size_t k = 0; k < spec.n; ++k) a(Eigen::Index(k)) += std::exp(-w) * lag[k];
  }
  for (std::size_t k = 0; k < spec.n; ++k) a(Eigen::Index(k)) /= double(k + 1);
  return a;
}

Complex approximant_value(const ApproximantSpec& spec, Complex s) {
  const Eigen::VectorXcd a = approximant_coefficients(spec);
  Complex sum = 0.0;
  for (std::size_t k = 0; k < spec.n; ++k) {
    const Complex b1 = binomial_general(s / 2.0 + double(k) + spec.delta, k + 1);
    const Complex b2 = binomial_general((1.0 - s) / 2.0 + double(k) + spec.delta, k + 1);
    if (b1 == Complex(0.0) || b2 == Complex(0.0))
      throw Error(ErrorKind::pole, "approximant_value: binomial denominator vanishes");
    sum += a(Eigen::Index(k)) * (1.0 / b1 + 1.0 / b2);
  }
  return 1.0 - s * (1.0 - s) * sum;
}

Complex approximant_denominator(const ApproximantSpec& spec, Complex s) {
  const double top = double(spec.n) - 1.0 + spec.delta;
  return binomial_general(s / 2.0 + top, spec.n) * binomial_general((1.0 - s) / 2.0 + top, spec.n);
}

PolynomialC approximant_polynomial(const ApproximantSpec& spec) {
  if (spec.variant == ApproximantVariant::upsilon) return upsilon_approximant_polynomial(spec.n, spec.delta);
  if (spec.variant == ApproximantVariant::cf) return cf_approximant_polynomial(spec.cf_level, spec.z_max);
  check_degree(spec.n, "approximant_polynomial");
  if (spec.z_max < 3) throw Error(ErrorKind::domain, "approximant_polynomial: requires z_max >= 3");
  if (!(spec.delta > 0.0)) throw Error(ErrorKind::domain, "approximant_polynomial: requires delta > 0");
  // The top coefficients come out of a near-total cancellation (they vanish for an
  // untruncated z-sum), so the construction runs in 100 digits and is rounded at the end.
  const std::vector<Wide> wide = wide_approximant_polynomial(spec.n, Wide(spec.delta), spec.z_max);
  PolynomialC out;
  out.coeffs.resize(Eigen::Index(wide.size()));
  for (std::size_t i = 0; i < wide.size(); ++i) out.coeffs(Eigen::Index(i)) = Complex(static_cast<double>(wide[i]), 0.0);
  out.center = 0.5;
  out.trim();
  return out;
}

PolynomialC upsilon_approximant_polynomial(std::size_t k, double delta) {
  check_degree(k, "upsilon_approximant_polynomial");
  if (!(delta > 0.0)) throw Error(ErrorKind::domain, "upsilon_approximant_polynomial: requires delta > 0");
  // b_i = Σ_j c_j e^{-w_j} L_i^{(Δ)}(w_j), w_j = j²π/4, c = (1, -2, 1, 0) by j mod 4
  std::vector<Complex> b(k + 1, 0.0);
  std::vector<Complex> lag(k + 1);
  for (std::size_t j = 60; j >= 1; --j) {
    const double w = double(j * j) * pi / 4.0;
    const double weight = (j % 4 == 1 || j % 4 == 3) ? 1.0 : (j % 4 == 2 ? -2.0 : 0.0);
    if (weight == 0.0 || std::exp(-w) == 0.0) continue;
    laguerre_recur_batch(delta, w, lag);
    for (std::size_t i = 0; i <= k; ++i) b[i] += weight * std::exp(-w) * lag[i];
  }
  // Δ - s/2 + j = (Δ + j - 1/4) - u/2, normalised by j
  auto factor = [&](std::size_t j, double sign) { return linear((delta + double(j) - 0.25) / double(j), sign * 0.5 / double(j)); };

  Poly bk_minus = constant(1.0);  // binom(k+1+Δ-(1-s)/2, k+1)
  for (std::size_t j = 1; j <= k + 1; ++j) bk_minus = mul(bk_minus, factor(j, 1.0));

  Poly g = constant(1.0);
  Poly weighted = constant(b[k] / double(k + 1));
  for (std::size_t i = k; i-- > 0;) {
    g = mul(g, factor(i + 2, -1.0));
    weighted = add(weighted, (b[i] / double(i + 1)) * g);
  }
  PolynomialC out;
  out.coeffs = symmetrize(mul(weighted, bk_minus));
  out.center = 0.5;
  out.trim();
  return out;
}

PolynomialC cf_approximant_polynomial(std::size_t level, std::size_t z_max) {
  check_degree(level * z_max, "cf_approximant_polynomial");
  const std::size_t last = 2 * level + 1;
  std::vector<Poly> p(z_max), q(z_max);
  for (std::size_t z = 1; z <= z_max; ++z) {
    const double w = double(z * z) * pi;
    // a = s/2 = u/2 + 1/4
    Poly p0 = constant(0.0), p1 = constant(1.0), q0 = constant(1.0), q1 = constant(w);
    for (std::size_t k = 2; k <= last; ++k) {
      Poly pa, qa;
      if (k % 2 == 0) {
        const Poly coef = linear(double(k / 2) - 0.25, -0.5);
        pa = add(mul(coef, p0), p1);
        qa = add(mul(coef, q0), q1);
      } else {
        const double coef = double((k - 1) / 2);
        pa = add(coef * p0, w * p1);
        qa = add(coef * q0, w * q1);
      }
      const double m = qa.cwiseAbs().maxCoeff();
      p0 = p1 / m;
      q0 = q1 / m;
      p1 = pa / m;
      q1 = qa / m;
    }
    p[z - 1] = std::exp(-w) * p1;
    q[z - 1] = q1;
  }
  Poly den = constant(1.0);
  for (std::size_t z = 0; z < z_max; ++z) den = mul(den, drop_odd(mul(q[z], mirror(q[z]))));
  Poly num_sum = constant(0.0);
  for (std::size_t z = 0; z < z_max; ++z) {
    Poly t = symmetrize(mul(p[z], mirror(q[z])));
    for (std::size_t other = 0; other < z_max; ++other)
      if (other != z) t = mul(t, drop_odd(mul(q[other], mirror(q[other]))));
    num_sum = add(num_sum, t);
  }
  Poly s1s(3);
  s1s << 0.25, 0.0, -1.0;
  PolynomialC out;
  out.coeffs = add(den, -mul(s1s, num_sum));
  out.center = 0.5;
  out.trim();
  return out;
}

RootSet find_roots(const PolynomialC& poly, double tol, const RootFinderOptions& opt) {
  PolynomialC p = poly;
  p.trim();
  if (p.degree() < 1 || p.coeffs(Eigen::Index(p.degree())) == Complex(0.0))
    throw Error(ErrorKind::domain, "find_roots: requires degree >= 1");
  const Poly& c = p.coeffs;
  const Eigen::Index n = c.size() - 1;

  Eigen::Index zeros = 0;
  while (c(zeros) == Complex(0.0)) ++zeros;
  const Poly deflated = c.tail(n + 1 - zeros);

  bool even = opt.use_parity && deflated.size() % 2 == 1 && zeros % 2 == 0;
  for (Eigen::Index i = 1; even && i < deflated.size(); i += 2) even = deflated(i) == Complex(0.0);

  std::mt19937_64 rng(opt.seed);
  std::vector<Complex> v(std::size_t(zeros), 0.0);
  RootSet rs;
  if (deflated.size() > 1) {
    if (even) {
      Poly half(deflated.size() / 2 + 1);
      for (Eigen::Index i = 0; i < half.size(); ++i) half(i) = deflated(2 * i);
      const AberthResult ab = aberth(half, opt.max_sweeps, rng);
      rs.sweeps = ab.sweeps;
      rs.converged = ab.converged;
      for (const Complex w : ab.roots) {
        const Complex r = std::sqrt(newton_polish(half, w));
        v.push_back(r);
        v.push_back(-r);
      }
    } else {
      const AberthResult ab = aberth(deflated, opt.max_sweeps, rng);
      rs.sweeps = ab.sweeps;
      rs.converged = ab.converged;
      v.insert(v.end(), ab.roots.begin(), ab.roots.end());
    }
  }
  rs.roots.resize(Eigen::Index(v.size()));
  rs.classes.assign(v.size(), RootClass::unclassified);
  rs.polished.assign(v.size(), false);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex r = v[i] == Complex(0.0) ? v[i] : newton_polish(c, v[i]);
    const double res = v[i] == Complex(0.0) ? 0.0 : relative_residual(c, r);
    rs.roots(Eigen::Index(i)) = r + p.center;
    rs.polished[i] = res < tol;
    rs.max_residual = std::max(rs.max_residual, res);
  }
  return rs;
}

RootSet classify_roots(RootSet rs, const ApproximantSpec& spec, double tau, double prefactor_tau) {
  if (!(tau > 0.0)) throw Error(ErrorKind::domain, "classify_roots: requires tau > 0");
  rs.tau = tau;
  rs.classes.assign(std::size_t(rs.roots.size()), RootClass::unclassified);
  const double spacing = 2.0 * pi / std::log(2.0);
  for (Eigen::Index i = 0; i < rs.roots.size(); ++i) {
    const Complex s = rs.roots(i);
    RootClass& cls = rs.classes[std::size_t(i)];
    if (std::abs(s.real() - 0.5) < tau) {
      cls = RootClass::on_critical_line;
      continue;
    }
    if (spec.variant == ApproximantVariant::upsilon) {
      const double k = std::round(s.imag() / spacing);
      if (k != 0.0) {
        const double d = std::min(std::abs(s - Complex(0.0, k * spacing)), std::abs(s - Complex(1.0, k * spacing)));
        if (d < prefactor_tau) {
          cls = RootClass::prefactor_zero;
          continue;
        }
      }
    }
    if (s.real() <= -2.0 * spec.delta - 1.0 || s.real() > 2.0 * spec.delta) cls = RootClass::outside_strip;
    else cls = RootClass::off_line;
  }
  return rs;
}

RootSet sorted(RootSet rs) {
  std::vector<std::size_t> idx(std::size_t(rs.roots.size()));
  std::iota(idx.begin(), idx.end(), std::size_t(0));
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Complex x = rs.roots(Eigen::Index(a)), y = rs.roots(Eigen::Index(b));
    if (x.imag() != y.imag()) return x.imag() < y.imag();
    return x.real() < y.real();
  });
  RootSet out = rs;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out.roots(Eigen::Index(k)) = rs.roots(Eigen::Index(idx[k]));
    if (idx[k] < rs.classes.size()) out.classes[k] = rs.classes[idx[k]];
    if (idx[k] < rs.polished.size()) out.polished[k] = rs.polished[idx[k]];
  }
  return out;
}

void export_rootset(const RootSet& input, const std::filesystem::path& path, ExportFormat format) {
  const RootSet rs = sorted(input);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot open '" + path.string() + "': " + std::strerror(errno));
  const std::size_t n = std::size_t(rs.roots.size());
  auto cls = [&](std::size_t k) { return k < rs.classes.size() ? rs.classes[k] : RootClass::unclassified; };
  auto pol = [&](std::size_t k) { return k < rs.polished.size() && rs.polished[k]; };

  switch (format) {
    case ExportFormat::csv:
      out << csv_row({"re", "im", "class", "polished"});
      for (std::size_t k = 0; k < n; ++k) {
        const Complex r = rs.roots(Eigen::Index(k));
        out << csv_row({format_double(r.real()), format_double(r.imag()), to_string(cls(k)), pol(k) ? "1" : "0"});
      }
      break;
    case ExportFormat::json: {
      nlohmann::json roots = nlohmann::json::array();
      for (std::size_t k = 0; k < n; ++k) {
        const Complex r = rs.roots(Eigen::Index(k));
        roots.push_back({{"re", r.real()}, {"im", r.imag()}, {"class", to_string(cls(k))}, {"polished", pol(k)}});
      }
      const nlohmann::json doc = {
          {"inputs", {{"tau", rs.tau}}},
          {"outputs", {{"roots", roots}}},
          {"diagnostics",
           {{"count", n}, {"sweeps", rs.sweeps}, {"converged", rs.converged}, {"max_residual", rs.max_residual}}}};
      out << doc.dump(2) << '\n';
      break;
    }
    case ExportFormat::gnuplot: {
      static constexpr RootClass order[] = {RootClass::on_critical_line, RootClass::off_line, RootClass::outside_strip,
                                            RootClass::prefactor_zero, RootClass::unclassified};
      out << "# roots: re im class-index\n$roots << EOD\n";
      for (std::size_t k = 0; k < n; ++k) {
        const Complex r = rs.roots(Eigen::Index(k));
        const auto ci = std::find(std::begin(order), std::end(order), cls(k)) - std::begin(order);
        out << format_double(r.real()) << ' ' << format_double(r.imag()) << ' ' << ci << '\n';
      }
      out << "EOD\n"
          << "set xlabel 'Re(s)'\nset ylabel 'Im(s)'\nset grid\n"
          << "set arrow from 0.5, graph 0 to 0.5, graph 1 nohead dashtype 2\n"
          << "plot ";
      for (std::size_t c = 0; c < std::size(order); ++c) {
        if (c) out << ", \\\n     ";
        out << "$roots using 1:($3==" << c << " ? $2 : 1/0) with points pt 7 title '" << to_string(order[c]) << "'";
      }
      out << '\n';
      break;
    }
  }
  if (!out) throw Error(ErrorKind::io, "write failed for '" + path.string() + "': " + std::strerror(errno));
}

RootSet import_rootset_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path.string() + "': " + std::strerror(errno));
  const nlohmann::json doc = nlohmann::json::parse(in);
  RootSet rs;
  rs.tau = doc.at("inputs").at("tau").get<double>();
  const auto& roots = doc.at("outputs").at("roots");
  rs.roots.resize(Eigen::Index(roots.size()));
  for (std::size_t k = 0; k < roots.size(); ++k) {
    rs.roots(Eigen::Index(k)) = complex_from_json(roots[k]);
    rs.classes.push_back(parse_root_class(roots[k].at("class").get<std::string>()));
    rs.polished.push_back(roots[k].at("polished").get<bool>());
  }
  const auto& d = doc.at("diagnostics");
  rs.sweeps = d.at("sweeps").get<std::size_t>();
  rs.converged = d.at("converged").get<bool>();
  rs.max_residual = d.at("max_residual").get<double>();
  return rs;
}

}  // namespace zetakit
