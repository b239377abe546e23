#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

namespace zetakit {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double default_tol = 1e-14;

enum class ErrorKind { pole, domain, convergence, degree_cap, overflow, division, range, io };

const char* to_string(ErrorKind kind) noexcept;

// Single error type for the library. The message names the violated condition.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct SeriesResult {
  Complex value{};
  std::size_t terms_used = 0;
  double tail_estimate = 0.0;
  // Set when large alternating terms make the value unreliable.
  bool cancellation_warning = false;
  // Value obtained from a complementary function instead of the named method.
  bool complemented = false;
};

bool is_nonpositive_integer(Complex z) noexcept;

// Principal branch of log Γ, analytic off (−∞, 0]. On the negative real
// axis the imaginary part is −π·⌈−x⌉.
Complex log_gamma(Complex z);
Complex gamma(Complex z);
// 1/Γ(z); exactly zero at the poles.
Complex reciprocal_gamma(Complex z);

// Γ(num_0)···Γ(num_m) / Γ(den_0)···Γ(den_n), evaluated in log space.
// Zero if a denominator sits on a pole, error if a numerator does.
Complex gamma_ratio(std::span<const Complex> num, std::span<const Complex> den);
Complex gamma_ratio(std::initializer_list<Complex> num, std::initializer_list<Complex> den);

// a(a−1)···(a−k+1)/k!
Complex binomial_general(Complex a, std::size_t k) noexcept;

// exp(s·Log z) with the cut on the negative real axis, Arg z ∈ (−π, π].
Complex pow_principal(Complex z, Complex s);
Complex log_principal(Complex z);

}  // namespace zetakit
