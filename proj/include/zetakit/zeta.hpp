#pragma once

#include <cstddef>
#include <string_view>

#include "zetakit/numeric.hpp"

namespace zetakit {

// xi = s(s-1) ζ(s) Γ(s/2) π^{-s/2}
struct CompletedZetaValue {
  Complex xi{};
  std::size_t terms = 0;
  double tail_bound = 0.0;
};

enum class ZetaMethod { basic, general, upsilon };

ZetaMethod parse_zeta_method(std::string_view name);
const char* to_string(ZetaMethod method) noexcept;

inline constexpr std::size_t default_zeta_terms = 6;

CompletedZetaValue xi_basic(Complex s, std::size_t K = default_zeta_terms);
CompletedZetaValue xi_general(Complex s, Complex x, std::size_t K = default_zeta_terms);
CompletedZetaValue xi_upsilon(Complex s, Complex x, std::size_t K = default_zeta_terms);

// Tail s(1-s) Σ_{k=from..to} of the x = 1 series, summed directly so that
// differences between truncations stay resolvable below double epsilon.
Complex xi_basic_tail(Complex s, std::size_t from, std::size_t to);

Complex zeta_value(Complex s, ZetaMethod method = ZetaMethod::basic, std::size_t K = default_zeta_terms,
                   Complex x = 1.0);

// |LHS - RHS| of the lower/upper gamma lattice identity.
double fourier_gamma_residual(Complex s, Complex x, std::size_t K = default_zeta_terms);

// Σ_{n>=N} n^{-s} by Euler–Maclaurin.
Complex hurwitz_tail(Complex s, std::size_t N);

// Independent oracle: accelerated alternating eta series. Validated for
// Re(s) > -3 and |Im(s)| <= 100.
Complex reference_zeta(Complex s);

}  // namespace zetakit
