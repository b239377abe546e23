#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles/oracle_values.hpp"
#include "zetakit/incgamma.hpp"
#include "zetakit/laguerre.hpp"

using namespace zetakit;
using testing::rel;

namespace {

Complex scale(Complex s, Complex z) { return std::exp(s * log_principal(z) - z); }

}  // namespace

TEST_SUITE("incgamma") {
  TEST_CASE("lower gamma") {
    for (const Complex z : {Complex(0.3), Complex(2.0), Complex(1.0, -2.0)})
      CHECK(rel(lower_gamma_series(1.0, z).value, 1.0 - std::exp(-z)) < 1e-14);
    CHECK(lower_gamma_series(0.7, 0.0).value == Complex(0.0));
    CHECK(rel(lower_gamma_series(0.5, 1.0).value, oracle::lower_gamma_0p5_1) < 1e-14);
    CHECK(testing::error_kind([] { lower_gamma_series(-2.0, 1.0); }) == ErrorKind::pole);
  }

  TEST_CASE("upper gamma by continued fraction") {
    for (const Complex z : {Complex(0.4), Complex(3.0), Complex(2.0, 5.0)}) {
      CHECK(rel(upper_gamma_cf(1.0, z).value, std::exp(-z)) < 1e-13);
      CHECK(rel(upper_gamma_cf(2.0, z).value, (z + 1.0) * std::exp(-z)) < 1e-13);
    }
    CHECK(rel(upper_gamma_cf({0.5, 3.0}, {2.0, -1.0}).value, oracle::upper_gamma_0p5_3i_2_mi) < 1e-13);
    CHECK(rel(upper_gamma_cf(0.4, 2.0).value, oracle::upper_gamma_0p4_2) < 1e-13);
    CHECK(rel(upper_gamma_cf({-1.5, 2.0}, 3.0).value, oracle::upper_gamma_m1p5_2i_3) < 1e-13);
    CHECK(rel(upper_gamma_cf_scaled(0.5, 3.0).value, oracle::upper_gamma_0p5_3_scaled) < 1e-14);
    CHECK(testing::error_kind([] { upper_gamma_cf(0.5, -1.0); }) == ErrorKind::domain);
  }

  TEST_CASE("upper gamma where the fraction is ill-conditioned") {
    const SeriesResult a = upper_gamma_cf(9.9, 0.2);
    CHECK(a.complemented);
    CHECK(rel(a.value, oracle::upper_gamma_9p9_0p2) < 1e-13);
    const SeriesResult b = upper_gamma_cf({8.0, 6.0}, 0.4);
    CHECK(b.complemented);
    CHECK(rel(b.value, oracle::upper_gamma_8_6i_0p4) < 1e-12);
    CHECK_FALSE(upper_gamma_cf(0.5, 3.0).complemented);
  }

  TEST_CASE("complementarity on a grid") {
    for (const Complex s : {Complex(0.2), Complex(0.5, 3.0), Complex(-2.5, 1.0), Complex(4.0, -2.0), Complex(9.5)})
      for (const Complex z : {Complex(0.3), Complex(1.0, 1.0), Complex(2.5), Complex(4.0, -3.0), Complex(7.0)}) {
        const Complex sum = lower_gamma_series(s, z).value + upper_gamma_cf(s, z).value;
        CHECK(rel(sum, std::exp(log_gamma(s))) < 1e-11);
      }
  }

  TEST_CASE("convergent denominators in closed form") {
    const Complex s(0.3, 0.2), z(1.4, -0.5);
    const auto q0 = convergent_q_closed(0, s, z);
    CHECK(std::abs(q0.first - 1.0) < 1e-15);
    CHECK(std::abs(q0.second - z) < 1e-15);
    const auto q1 = convergent_q_closed(1, s, z);
    CHECK(rel(q1.first, 1.0 - s + z) < 1e-14);
    CHECK(rel(q1.second, z * (2.0 - s + z)) < 1e-14);
    const auto raw = convergents_recursion(0.3, 5.0, 25);
    const auto q12 = convergent_q_closed(12, 0.3, 5.0);
    CHECK(rel(q12.first, raw[24].q) < 1e-12);
    CHECK(rel(q12.second, raw[25].q) < 1e-12);
  }

  TEST_CASE("closed form equals recursion for random (s, z)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(-3.0, 3.0), zr(0.1, 6.0), zi(-4.0, 4.0);
    for (int t = 0; t < 10; ++t) {
      const Complex s(re(rng), re(rng)), z(zr(rng), zi(rng));
      const auto raw = convergents_recursion(s, z, 81);
      for (std::size_t k = 0; k <= 40; ++k) {
        const auto q = convergent_q_closed(k, s, z);
        CHECK(rel(q.first, raw[2 * k].q) < 1e-12);
        CHECK(rel(q.second, raw[2 * k + 1].q) < 1e-12);
      }
    }
  }

  TEST_CASE("convergent sum") {
    CHECK(rel(upper_gamma_convergent_sum({0.4, 2.0}, 1.5, 0), 1.0 / 1.5) < 1e-15);
    for (std::size_t k : {1u, 5u, 20u}) CHECK(rel(upper_gamma_convergent_sum(1.0, 2.5, k), 1.0 / 2.5) < 1e-14);
    CHECK(rel(upper_gamma_convergent_sum(0.5, 3.0, 30), oracle::upper_gamma_0p5_3_scaled) < 1e-12);
    const Complex s(0.7, -1.2), z(2.0, 0.5);
    const auto raw = convergents_recursion(s, z, 31);
    for (std::size_t k = 0; k <= 15; ++k) {
      CHECK(rel(upper_gamma_convergent_sum(s, z, k), raw[2 * k + 1].p / raw[2 * k + 1].q) < 1e-12);
      if (k > 0)
        CHECK(rel(upper_gamma_convergent_sum(s, z, k, ConvergentParity::even), raw[2 * k].p / raw[2 * k].q) < 1e-12);
    }
  }

  TEST_CASE("Laguerre limit") {
    for (std::size_t k : {1u, 4u, 30u}) CHECK(rel(upper_gamma_laguerre_limit(1.0, 2.0, k, ConvergentParity::odd), 0.5) < 1e-13);
    const double want = oracle::upper_gamma_0p4_2_scaled;
    const double e_odd = std::abs(upper_gamma_laguerre_limit(0.4, 2.0, 40, ConvergentParity::odd) - want) / want;
    const double e_even = std::abs(upper_gamma_laguerre_limit(0.4, 2.0, 40, ConvergentParity::even) - want) / want;
    const double rate = std::max(std::exp(-4.0 * std::sqrt(80.0)) / std::sqrt(80.0), 1e-15);
    CHECK(e_odd < 100.0 * rate);
    CHECK(e_even < 100.0 * rate);
    CHECK(testing::error_kind([] { upper_gamma_laguerre_limit(0.4, 0.0, 3, ConvergentParity::odd); }) == ErrorKind::domain);
  }

  TEST_CASE("Laguerre limit, rate between k and 4k") {
    const double want = oracle::upper_gamma_0p4_2_scaled;
    const double e10 = std::abs(upper_gamma_laguerre_limit(0.4, 2.0, 10, ConvergentParity::odd) - want);
    const double e40 = std::abs(upper_gamma_laguerre_limit(0.4, 2.0, 40, ConvergentParity::odd) - want);
    const double predicted = std::exp(-4.0 * (std::sqrt(80.0) - std::sqrt(20.0))) * std::sqrt(20.0 / 80.0);
    CHECK(std::abs(std::log10((e40 / e10) / predicted)) < 1.0);
  }

  TEST_CASE("Laguerre series") {
    const SeriesResult r = upper_gamma_laguerre_series(0.3, pi, 5.0, 400);
    CHECK(rel(r.value, oracle::laguerre_series_0p3_pi_a5_n400) < 1e-12);
    // the oscillating tail only drops below 1e-8 around N = 1600
    CHECK(rel(upper_gamma_laguerre_series(0.3, pi, 5.0, 1600).value, upper_gamma_cf(0.3, pi).value) < 1e-8);
    CHECK(testing::error_kind([] { upper_gamma_laguerre_series(7.0, 1.0, 5.0, 10); }) == ErrorKind::domain);
  }

  TEST_CASE("scaled form equals unscaled") {
    for (const Complex s : {Complex(0.5, 3.0), Complex(2.0, -1.0)})
      for (const Complex z : {Complex(1.0), Complex(3.0, 2.0)})
        CHECK(rel(upper_gamma_cf_scaled(s, z).value * scale(s, z), upper_gamma_cf(s, z).value) < 1e-13);
  }
}
