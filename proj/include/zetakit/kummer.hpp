#pragma once

#include <cstddef>

#include "zetakit/numeric.hpp"

namespace zetakit {

struct KummerParams {
  Complex a{};
  Complex b{};
  Complex z{};
};

inline constexpr std::size_t kummer_max_terms = 100000;

// Power series, stopping after three consecutive terms below tol relative.
SeriesResult kummer_m_series(const KummerParams& p, double tol = default_tol);

// Γ(1-b)/Γ(1-b+a) M(a,b,z) + Γ(b-1)/Γ(a) z^{1-b} M(a-b+1,2-b,z).
// Integer b is rejected; see kummer_u_integer_b.
SeriesResult kummer_u(const KummerParams& p, double tol = default_tol);

// Integer-b policy: average of U at b ± eps.
SeriesResult kummer_u_integer_b(const KummerParams& p, double tol = default_tol, double eps = 1e-6);

// Expansions in Laguerre polynomials, truncated after n_terms + 1 terms.
SeriesResult kummer_m_laguerre(const KummerParams& p, Complex beta, std::size_t n_terms);
SeriesResult kummer_u_laguerre(const KummerParams& p, Complex alpha, std::size_t n_terms);

// (1+t)^{-alpha-1} Σ L_i^{(alpha)}(z) (t/(1+t))^i, which tends to e^{-tz}.
SeriesResult exp_laguerre_partial(Complex t, Complex alpha, Complex z, std::size_t n_terms);

}  // namespace zetakit
