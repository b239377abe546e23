#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "oracles/oracle_values.hpp"
#include "zetakit/laguerre.hpp"

using namespace zetakit;
using testing::rel;
using testing::rel1;

TEST_SUITE("laguerre") {
  TEST_CASE("explicit sum, small cases") {
    const Complex a(2.7, -0.4), z(1.3, 0.2);
    CHECK(std::abs(laguerre_explicit({1, a, z}) - (1.0 + a - z)) < 1e-15);
    CHECK(rel(laguerre_explicit({6, a, 0.0}), binomial_general(6.0 + a, 6)) < 1e-14);
    CHECK(laguerre_explicit({2, 0.0, 1.0}).real() == doctest::Approx(-0.5).epsilon(1e-15));
  }

  TEST_CASE("explicit sum refuses high degree") {
    CHECK(testing::error_kind([] { laguerre_explicit({laguerre_explicit_cap + 1, 0.0, 1.0}); }) ==
          ErrorKind::degree_cap);
    CHECK_NOTHROW(laguerre_explicit({laguerre_explicit_cap, 0.0, 1.0}));
  }

  TEST_CASE("recursion seeds and oracle values") {
    CHECK(laguerre_recur({0, 3.3, 7.0}) == Complex(1.0));
    CHECK(std::abs(laguerre_recur({1, 2.0, 3.0})) < 1e-15);
    CHECK(rel(laguerre_recur({25, -0.5, pi}), oracle::laguerre_25_m0p5_pi) < 1e-12);
    CHECK(rel(laguerre_recur({10, {1.0, 1.0}, {2.0, -1.0}}), oracle::laguerre_10_1pi_2mi) < 1e-13);
    CHECK(rel(laguerre_recur({3, -0.5, 1.0}), oracle::laguerre_3_m0p5_1) < 1e-14);
  }

  TEST_CASE("recursion equals explicit sum on the grid") {
    for (std::size_t i = 0; i <= 25; ++i)
      for (const Complex a : {Complex(-0.5), Complex(0.0), Complex(1.0), Complex(2.7), Complex(3.0, 1.0)})
        for (const Complex z : {Complex(0.5), Complex(1.0), Complex(pi), Complex(2.0, -1.0)})
          CHECK(rel1(laguerre_recur({i, a, z}), laguerre_explicit({i, a, z})) < 1e-10);
  }

  TEST_CASE("batch agrees with single evaluation") {
    std::vector<Complex> out(31);
    laguerre_recur_batch(0.7, {1.5, 0.5}, out);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == laguerre_recur({i, 0.7, {1.5, 0.5}}));
  }

  TEST_CASE("shifted order") {
    const Complex b(0.8, 0.3), z(1.7, -0.2);
    CHECK(laguerre_shifted_recur(0, b, z) == Complex(1.0));
    CHECK(std::abs(laguerre_shifted_recur(1, b, z) - (b - z)) < 1e-15);
    CHECK(rel(laguerre_shifted_recur(15, 4.0, 2.0), oracle::laguerre_15_m11_2) < 1e-11);
    for (std::size_t i = 0; i <= 20; ++i)
      CHECK(rel1(laguerre_shifted_recur(i, b, z), laguerre_explicit({i, b - double(i), z})) < 1e-10);
    std::vector<Complex> out(21);
    laguerre_shifted_batch(b, z, out);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(rel1(out[i], laguerre_shifted_recur(i, b, z)) < 1e-14);
  }

  TEST_CASE("convolution identity") {
    const Complex a(0.4, 0.1), b(1.5), x(0.9), y(1.6, -0.3);
    for (std::size_t i = 0; i <= 15; ++i) {
      Complex sum = 0.0;
      for (std::size_t j = 0; j <= i; ++j) sum += laguerre_recur({i - j, a, x}) * laguerre_recur({j, b, y});
      CHECK(rel1(sum, laguerre_recur({i, a + b + 1.0, x + y})) < 1e-10);
    }
  }

  TEST_CASE("growth law at non-integer beta") {
    // beta = 3 makes binom(3, j) vanish for j > 3, see the design notes
    const double beta = 3.5, z = 1.0;
    const double r = (laguerre_shifted_recur(2000, beta, z) / binomial_general(beta, 2000)).real();
    CHECK(std::abs(r / std::exp(z) - 1.0) < 0.02);
  }

  TEST_CASE("asymptotic, -z case") {
    // the leading term carries 1/(2 sqrt(pi)), half the literal expression
    const Complex v = laguerre_asymptotic({4, 0.0, 1.0}, AsymptoticSign::minus);
    const double literal = std::pow(4.0, -0.25) / std::sqrt(pi) * std::exp(-0.5) * std::exp(2.0 * std::sqrt(4.5));
    CHECK(rel(v, 0.5 * literal) < 1e-14);
    const std::size_t i = 10000;
    const Complex ratio = laguerre_recur({i, 0.0, -1.0}) / laguerre_asymptotic({i, 0.0, 1.0}, AsymptoticSign::minus);
    CHECK(std::abs(ratio - 1.0) < 0.05);
  }

  TEST_CASE("asymptotic, +z case away from cosine zeros") {
    const std::size_t i = 10000;
    const Complex ratio = laguerre_recur({i, 1.0, 2.0}) / laguerre_asymptotic({i, 1.0, 2.0}, AsymptoticSign::plus);
    CHECK(std::abs(ratio - 1.0) < 0.05);
  }

  TEST_CASE("asymptotic preconditions") {
    CHECK(testing::error_kind([] { laguerre_asymptotic({0, 0.0, 1.0}, AsymptoticSign::plus); }) == ErrorKind::domain);
    CHECK(testing::error_kind([] { laguerre_asymptotic({10, 0.0, -1.0}, AsymptoticSign::minus); }) == ErrorKind::domain);
  }
}
