#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zetakit/numeric.hpp"

namespace zetakit {

struct ConvergentPair {
  Complex p{};
  Complex q{};
  std::size_t index = 0;
};

enum class ConvergentParity { even, odd };

inline constexpr std::size_t cf_max_levels = 10000;
inline constexpr std::size_t cf_rescale_every = 50;

// γ(s,z) through z^s/s e^{-z} M(1, s+1, z).
SeriesResult lower_gamma_series(Complex s, Complex z, double tol = default_tol);

// Γ(s,z) from the Gauss continued fraction. Where the fraction is
// ill-conditioned (Re s > |z| + 2) the value is Γ(s) - γ(s,z) instead and
// `complemented` is set.
SeriesResult upper_gamma_cf(Complex s, Complex z, double tol = default_tol);
// Same, divided by z^s e^{-z}. Avoids under/overflow of the prefactor.
SeriesResult upper_gamma_cf_scaled(Complex s, Complex z, double tol = default_tol);

// Raw p_k, q_k for k = 0..levels. No rescaling, so keep levels small.
std::vector<ConvergentPair> convergents_recursion(Complex s, Complex z, std::size_t levels);

// (q_{2k}, q_{2k+1}) from Laguerre polynomials at -z.
std::pair<Complex, Complex> convergent_q_closed(std::size_t k, Complex s, Complex z);

// p_{2k+1}/q_{2k+1} (odd) or p_{2k}/q_{2k} (even) as a telescoped sum.
Complex upper_gamma_convergent_sum(Complex s, Complex z, std::size_t k,
                                   ConvergentParity parity = ConvergentParity::odd);

// Quotient of Laguerre sums with limit Γ(s,z)/(z^s e^{-z}).
Complex upper_gamma_laguerre_limit(Complex s, Complex z, std::size_t k, ConvergentParity variant);

// Γ(s,z) = z^s e^{-z} Σ L_k^{(alpha)}(z) / ((k+1) binom(k+1+alpha-s, k+1))
SeriesResult upper_gamma_laguerre_series(Complex s, Complex z, Complex alpha, std::size_t n_terms);

}  // namespace zetakit
