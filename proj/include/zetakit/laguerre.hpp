#pragma once

#include <cstddef>
#include <span>

#include "zetakit/numeric.hpp"

namespace zetakit {

struct LaguerreQuery {
  std::size_t degree = 0;
  Complex order{};
  Complex argument{};
};

enum class AsymptoticSign { plus, minus };

inline constexpr std::size_t laguerre_explicit_cap = 40;

// Direct sum. Unstable beyond small degree, kept as an oracle.
Complex laguerre_explicit(const LaguerreQuery& q);

// Three-term recursion in the degree.
Complex laguerre_recur(const LaguerreQuery& q);

// out[i] = L_i^{(alpha)}(z) for i = 0..out.size()-1.
void laguerre_recur_batch(Complex alpha, Complex z, std::span<Complex> out);

// L_i^{(beta-i)}(z), the order drops by one with each degree.
Complex laguerre_shifted_recur(std::size_t degree, Complex beta, Complex z);
void laguerre_shifted_batch(Complex beta, Complex z, std::span<Complex> out);

// Leading-order estimate for large degree.
//   plus:  oscillatory estimate of L_i^{(alpha)}(z)
//   minus: exponentially growing estimate of L_i^{(alpha)}(-z)
Complex laguerre_asymptotic(const LaguerreQuery& q, AsymptoticSign sign);

}  // namespace zetakit
