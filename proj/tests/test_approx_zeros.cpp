#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "oracles/oracle_values.hpp"
#include "zetakit/approx_zeros.hpp"

using namespace zetakit;
using testing::rel;

namespace {

ApproximantSpec spec_of(std::size_t n, double delta) {
  ApproximantSpec s;
  s.n = n;
  s.delta = delta;
  return s;
}

double nearest(const RootSet& rs, Complex target) {
  double best = 1e300;
  for (Eigen::Index i = 0; i < rs.roots.size(); ++i) best = std::min(best, std::abs(rs.roots(i) - target));
  return best;
}

// every root has a partner at 1 - s
double mirror_gap(const RootSet& rs) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < rs.roots.size(); ++i) {
    double best = 1e300;
    for (Eigen::Index j = 0; j < rs.roots.size(); ++j) best = std::min(best, std::abs(rs.roots(j) - (1.0 - rs.roots(i))));
    worst = std::max(worst, best / std::max(1.0, std::abs(rs.roots(i))));
  }
  return worst;
}

}  // namespace

TEST_SUITE("approx_zeros") {
  TEST_CASE("coefficients a_k") {
    const Eigen::VectorXcd a = approximant_coefficients(spec_of(6, 5.0));
    for (Eigen::Index k = 0; k < 6; ++k) CHECK(rel(a(k), oracle::approx_a_delta5[k]) < 1e-12);
    ApproximantSpec bad = spec_of(6, 5.0);
    bad.z_max = 2;
    CHECK(testing::error_kind([&] { approximant_coefficients(bad); }) == ErrorKind::domain);
  }

  TEST_CASE("z truncation") {
    ApproximantSpec lo = spec_of(25, 5.0), hi = spec_of(25, 5.0);
    lo.z_max = 3;
    hi.z_max = 6;
    const Eigen::VectorXcd a = approximant_coefficients(lo), b = approximant_coefficients(hi);
    for (Eigen::Index k = 0; k <= 4; ++k) CHECK(rel(a(k), b(k)) < 1e-15);
    for (Eigen::Index k = 10; k < 25; ++k) CHECK(rel(a(k), b(k)) < 1e-11);
  }

  TEST_CASE("polynomial coefficients match the oracle, top coefficient included") {
    const PolynomialC p = approximant_polynomial(spec_of(3, 5.0));
    REQUIRE(p.degree() == 6);
    for (Eigen::Index i = 0; i <= 6; i += 2) CHECK(rel(p.coeffs(i), oracle::approx_poly_n3_delta5[i]) < 1e-13);
    for (Eigen::Index i = 1; i <= 6; i += 2) CHECK(p.coeffs(i) == Complex(0.0));

    const PolynomialC q = approximant_polynomial(spec_of(1, 1.0));
    REQUIRE(q.degree() == 2);
    CHECK(rel(q.coeffs(0), oracle::approx_poly_n1_delta1[0]) < 1e-14);
    CHECK(rel(q.coeffs(2), oracle::approx_poly_n1_delta1[2]) < 1e-14);

    const PolynomialC big = approximant_polynomial(spec_of(25, 5.0));
    REQUIRE(big.degree() == 50);
    for (Eigen::Index i = 0; i <= 50; i += 2) CHECK(rel(big.coeffs(i), oracle::approx_poly_n25_delta5[i]) < 1e-12);
  }

  TEST_CASE("polynomial is the approximant times its denominator") {
    const ApproximantSpec sp = spec_of(8, 2.5);
    const PolynomialC p = approximant_polynomial(sp);
    for (const Complex s : {Complex(0.5, 3.0), Complex(1.7, -0.4), Complex(-0.8, 6.0)}) {
      const Complex want = approximant_value(sp, s) * approximant_denominator(sp, s);
      CHECK(std::abs(p(s) - want) < 1e-12 * std::max(1.0, std::abs(want)));
    }
  }

  TEST_CASE("degree law") {
    for (std::size_t n = 1; n <= 40; ++n)
      for (const double d : {0.5, 1.0, 2.5, 5.0, 10.0}) CHECK(approximant_polynomial(spec_of(n, d)).degree() == 2 * n);
    CHECK(testing::error_kind([] { approximant_polynomial(spec_of(approximant_max_n + 1, 5.0)); }) == ErrorKind::degree_cap);
    CHECK(testing::error_kind([] { approximant_polynomial(spec_of(0, 5.0)); }) == ErrorKind::domain);
    CHECK(testing::error_kind([] { approximant_polynomial(spec_of(5, 0.0)); }) == ErrorKind::domain);
  }

  TEST_CASE("roots of the n = 25 polynomial") {
    const ApproximantSpec sp = spec_of(25, 5.0);
    const RootSet rs = classify_roots(find_roots(approximant_polynomial(sp)), sp);
    CHECK(rs.roots.size() == 50);
    CHECK(rs.converged);
    CHECK(mirror_gap(rs) < 1e-8);
    for (Eigen::Index i = 0; i < rs.roots.size(); ++i) {
      const Complex r = rs.roots(i);
      if (std::abs(r.imag()) < 1e-10) continue;
      // conjugate partner, real coefficients in u
      CHECK(nearest(rs, std::conj(r)) < 1e-8 * std::max(1.0, std::abs(r)));
    }
    // the first zero of ζ is near a root
    const Complex z1(0.5, oracle::first_zero_im);
    CHECK(nearest(rs, z1) == doctest::Approx(oracle::hurwitz_distances[3]).epsilon(1e-6));
  }

  TEST_CASE("Hurwitz trend toward the first zero") {
    const Complex z1(0.5, oracle::first_zero_im);
    double prev = 1e300;
    std::size_t idx = 0;
    for (std::size_t n : {10u, 15u, 20u, 25u}) {
      const double d = nearest(find_roots(approximant_polynomial(spec_of(n, 5.0))), z1);
      CHECK(d == doctest::Approx(oracle::hurwitz_distances[idx++]).epsilon(1e-6));
      CHECK(d < prev);
      prev = d;
    }
  }

  TEST_CASE("root finder on a known polynomial") {
    // (u^2 - 1)(u^2 + 4) = u^4 + 3u^2 - 4
    PolynomialC p;
    p.coeffs.resize(5);
    p.coeffs << -4.0, 0.0, 3.0, 0.0, 1.0;
    p.center = 0.5;
    for (const bool parity : {true, false}) {
      RootFinderOptions opt;
      opt.use_parity = parity;
      const RootSet rs = sorted(find_roots(p, 1e-12, opt));
      REQUIRE(rs.roots.size() == 4);
      CHECK(std::abs(rs.roots(0) - Complex(0.5, -2.0)) < 1e-12);
      CHECK(std::abs(rs.roots(3) - Complex(0.5, 2.0)) < 1e-12);
      CHECK(std::all_of(rs.polished.begin(), rs.polished.end(), [](bool b) { return b; }));
    }
  }

  TEST_CASE("zero roots are deflated") {
    PolynomialC p;
    p.coeffs.resize(4);
    p.coeffs << 0.0, 0.0, -1.0, 1.0;  // u^2 (u - 1)
    p.center = 0.0;
    const RootSet rs = sorted(find_roots(p));
    REQUIRE(rs.roots.size() == 3);
    CHECK(std::count_if(rs.roots.begin(), rs.roots.end(), [](Complex r) { return std::abs(r) < 1e-14; }) == 2);
  }

  TEST_CASE("root finder is deterministic for a seed") {
    const PolynomialC p = approximant_polynomial(spec_of(12, 3.0));
    RootFinderOptions opt;
    opt.seed = 42;
    const RootSet a = find_roots(p, 1e-10, opt), b = find_roots(p, 1e-10, opt);
    CHECK(a.roots == b.roots);
  }

  TEST_CASE("classification") {
    const ApproximantSpec sp = spec_of(25, 5.0);
    const RootSet rs = classify_roots(find_roots(approximant_polynomial(sp)), sp);
    for (Eigen::Index i = 0; i < rs.roots.size(); ++i) {
      const Complex r = rs.roots(i);
      const RootClass c = rs.classes[std::size_t(i)];
      CHECK(c != RootClass::unclassified);
      if (c == RootClass::on_critical_line) CHECK(std::abs(r.real() - 0.5) < 0.05);
      if (c == RootClass::outside_strip) CHECK((r.real() <= -2.0 * sp.delta - 1.0 || r.real() > 2.0 * sp.delta));
    }
    CHECK(parse_root_class(to_string(RootClass::off_line)) == RootClass::off_line);
  }

  TEST_CASE("second-difference variant") {
    const PolynomialC p = upsilon_approximant_polynomial(10, 5.0);
    ApproximantSpec sp = spec_of(10, 5.0);
    sp.variant = ApproximantVariant::upsilon;
    const RootSet rs = classify_roots(find_roots(p), sp);
    CHECK(rs.roots.size() == Eigen::Index(p.degree()));
    CHECK(mirror_gap(rs) < 1e-8);
    CHECK(parse_variant("upsilon") == ApproximantVariant::upsilon);
  }

  TEST_CASE("sorted order") {
    const RootSet rs = sorted(find_roots(approximant_polynomial(spec_of(6, 2.0))));
    for (Eigen::Index i = 1; i < rs.roots.size(); ++i) {
      const Complex a = rs.roots(i - 1), b = rs.roots(i);
      CHECK((a.imag() < b.imag() || (a.imag() == b.imag() && a.real() <= b.real())));
    }
  }

  TEST_CASE("export and import") {
    const ApproximantSpec sp = spec_of(6, 2.0);
    const RootSet rs = sorted(classify_roots(find_roots(approximant_polynomial(sp)), sp));
    const auto dir = std::filesystem::temp_directory_path() / "zetakit_test_export";
    std::filesystem::create_directories(dir);

    export_rootset(rs, dir / "r.json", ExportFormat::json);
    const RootSet back = import_rootset_json(dir / "r.json");
    CHECK(back.roots == rs.roots);
    CHECK(back.classes == rs.classes);

    export_rootset(rs, dir / "r.csv", ExportFormat::csv);
    std::ifstream csv(dir / "r.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "re,im,class,polished\r");

    export_rootset(rs, dir / "r.gp", ExportFormat::gnuplot);
    std::ifstream gp(dir / "r.gp");
    std::stringstream ss;
    ss << gp.rdbuf();
    CHECK(ss.str().find("$roots << EOD") != std::string::npos);

    CHECK(testing::error_kind([&] { export_rootset(rs, dir / "missing" / "x.csv", ExportFormat::csv); }) == ErrorKind::io);
    std::filesystem::remove_all(dir);
    CHECK(parse_export_format("gnuplot") == ExportFormat::gnuplot);
  }
}
