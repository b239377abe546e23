#include <doctest.h>

#include "helpers.hpp"
#include "oracles/oracle_values.hpp"
#include "zetakit/kummer.hpp"
#include "zetakit/laguerre.hpp"

using namespace zetakit;
using testing::rel;
using testing::rel1;

TEST_SUITE("kummer") {
  TEST_CASE("M series, trivial cases") {
    CHECK(kummer_m_series({1.3, 2.2, 0.0}).value == Complex(1.0));
    for (const Complex z : {Complex(0.5), Complex(-3.0), Complex(2.0, 1.0)})
      CHECK(rel(kummer_m_series({1.0, 1.0, z}).value, std::exp(z)) < 1e-14);
    const Complex lag = laguerre_explicit({3, 1.0, 1.5}) / binomial_general(4.0, 3);
    CHECK(rel1(kummer_m_series({-3.0, 2.0, 1.5}).value, lag) < 1e-14);
  }

  TEST_CASE("M series against oracle values") {
    CHECK(rel(kummer_m_series({0.5, 2.5, 1.0}).value, oracle::kummer_m_0p5_2p5_1) < 1e-14);
    CHECK(rel(kummer_m_series({{2.0, 1.0}, 0.3, -1.5}).value, oracle::kummer_m_2i_0p3_m1p5) < 1e-12);
  }

  TEST_CASE("M series records its tail and terms") {
    const SeriesResult r = kummer_m_series({0.5, 2.5, 1.0});
    CHECK(r.terms_used > 3);
    CHECK(r.tail_estimate < 1e-14);
    CHECK_FALSE(r.cancellation_warning);
    // a = -2: the series is a polynomial and stops exactly
    const SeriesResult p = kummer_m_series({-2.0, 1.5, 4.0});
    CHECK(p.tail_estimate == 0.0);
    CHECK(p.terms_used == 3);
  }

  TEST_CASE("M series preconditions") {
    CHECK(testing::error_kind([] { kummer_m_series({1.0, -2.0, 1.0}); }) == ErrorKind::pole);
    CHECK(testing::error_kind([] { kummer_m_series({1.0, 2.0, 1.0}, 0.0); }) == ErrorKind::domain);
  }

  TEST_CASE("Kummer transformation") {
    for (const Complex a : {Complex(-4.5), Complex(-1.2), Complex(0.7), Complex(2.0, 1.0), Complex(4.9)})
      for (const Complex b : {Complex(-3.5), Complex(0.3), Complex(1.7), Complex(2.5, -1.0), Complex(4.2)})
        for (const Complex z : {Complex(0.8), Complex(2.0, -3.0), Complex(4.5), Complex(1.5, 1.0)}) {
          const Complex lhs = kummer_m_series({a, b, z}).value;
          const Complex rhs = std::exp(z) * kummer_m_series({b - a, b, -z}).value;
          CHECK(rel(lhs, rhs) < 1e-10);
        }
  }

  TEST_CASE("U against oracle values") {
    CHECK(rel(kummer_u({1.0, 0.3, 1.7}).value, oracle::kummer_u_1_0p3_1p7) < 1e-13);
    CHECK(rel(kummer_u({1.0, 0.5, 2.0}).value, oracle::kummer_u_1_0p5_2) < 1e-12);
    CHECK(rel(kummer_u({-3.0, 0.5, 1.0}).value, oracle::kummer_u_m3_0p5_1) < 1e-13);
  }

  TEST_CASE("U(1, 1-s, z) is z^s e^z Γ(-s,z)") {
    const double s = 0.5, z = 2.0;
    // Γ(-1/2, z) from Γ(1/2, z) = sqrt(pi) erfc(sqrt z) by the downward recurrence
    const double g = (std::sqrt(pi) * std::erfc(std::sqrt(z)) - std::exp(-z) / std::sqrt(z)) / -0.5;
    CHECK(rel(kummer_u({1.0, 1.0 - s, z}).value, std::pow(z, s) * std::exp(z) * g) < 1e-12);
  }

  TEST_CASE("U for a = -3 is a Laguerre polynomial") {
    // U(-n, α+1, z) = (-1)^n n! L_n^{(α)}(z)
    CHECK(rel(kummer_u({-3.0, 0.5, 1.0}).value, -6.0 * laguerre_explicit({3, -0.5, 1.0})) < 1e-13);
  }

  TEST_CASE("U reflection at well-conditioned points") {
    for (const Complex a : {Complex(-1.2), Complex(0.7), Complex(2.0, 1.0)})
      for (const Complex b : {Complex(0.3), Complex(1.7), Complex(2.5, -1.0)})
        for (const Complex z : {Complex(0.8), Complex(1.5, 1.0)}) {
          const SeriesResult u = kummer_u({a, b, z});
          CHECK_FALSE(u.cancellation_warning);
          CHECK(rel(u.value, pow_principal(z, 1.0 - b) * kummer_u({1.0 + a - b, 2.0 - b, z}).value) < 1e-9);
        }
  }

  TEST_CASE("U flags heavy cancellation") {
    // the two terms are ~2e3 while U ~ 5e-6
    const SeriesResult u = kummer_u({4.9, -3.5, 4.5});
    CHECK(u.cancellation_warning);
    CHECK(rel(u.value, oracle::kummer_u_4p9_m3p5_4p5) < 1e-4);
  }

  TEST_CASE("U integer b") {
    CHECK(testing::error_kind([] { kummer_u({1.0, 2.0, 1.5}); }) == ErrorKind::domain);
    const SeriesResult u = kummer_u_integer_b({1.0, 2.0, 1.5});
    CHECK(rel(u.value, oracle::kummer_u_1_2_1p5) < 1e-8);
  }

  TEST_CASE("M Laguerre expansion") {
    const KummerParams p{0.5, 2.5, 1.0};
    const SeriesResult r = kummer_m_laguerre(p, 0.0, 50);
    CHECK(rel(r.value, kummer_m_series(p).value) < 1e-8);
    CHECK(r.terms_used == 51);
    // a = 0: only the i = 0 term survives
    const SeriesResult t = kummer_m_laguerre({0.0, 1.5, 2.0}, 0.3, 20);
    CHECK(t.terms_used == 1);
    CHECK(rel(t.value, 1.0) < 1e-14);
    CHECK(testing::error_kind([] { kummer_m_laguerre({2.0, 1.5, 1.0}, 0.0, 10); }) == ErrorKind::domain);
  }

  TEST_CASE("M Laguerre expansion, power-law tail") {
    // terms decay like i^{-(b-a+1)}
    const KummerParams p{0.5, 2.5, 1.0};
    const double t1 = kummer_m_laguerre(p, 0.7, 400).tail_estimate;
    const double t2 = kummer_m_laguerre(p, 0.7, 800).tail_estimate;
    const double rate = std::log(t1 / t2) / std::log(2.0);
    CHECK(rate == doctest::Approx(3.0).epsilon(0.15));
  }

  TEST_CASE("U Laguerre expansion") {
    const KummerParams p{1.0, 0.3, 1.7};
    CHECK(rel(kummer_u_laguerre(p, 2.0, 1000).value, oracle::kummer_u_1_0p3_1p7) < 1e-6);
    const SeriesResult t = kummer_u_laguerre({0.0, 0.3, 1.7}, 2.0, 50);
    CHECK(t.terms_used == 1);
    CHECK(rel(t.value, 1.0) < 1e-14);
    CHECK(testing::error_kind([] { kummer_u_laguerre({1.0, 3.0, 1.0}, 0.0, 10); }) == ErrorKind::domain);
  }

  TEST_CASE("exponential as a Laguerre series") {
    CHECK(exp_laguerre_partial(0.0, 0.4, 1.3, 0).value == Complex(1.0));
    CHECK(std::abs(exp_laguerre_partial(1.0, 0.0, 1.0, 60).value - std::exp(-1.0)) < 1e-9);
    CHECK(rel(exp_laguerre_partial(-0.25, -0.5, 2.0, 200).value, std::exp(0.5)) < 1e-6);
    CHECK(testing::error_kind([] { exp_laguerre_partial(-0.6, 0.0, 1.0, 10); }) == ErrorKind::domain);
  }
}
