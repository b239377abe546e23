#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "zetakit/numeric.hpp"

namespace zetakit {

enum class ApproximantVariant { laguerre_series, upsilon, cf };

ApproximantVariant parse_variant(std::string_view name);
const char* to_string(ApproximantVariant v) noexcept;

struct ApproximantSpec {
  double delta = 5.0;
  std::size_t n = 25;
  ApproximantVariant variant = ApproximantVariant::laguerre_series;
  std::size_t z_max = 5;
  // cf variant only: convergent level
  std::size_t cf_level = 6;
};

inline constexpr std::size_t approximant_max_n = 60;

// Coefficients ascending in the variable (s - center).
struct PolynomialC {
  Eigen::VectorXcd coeffs;
  Complex center = 0.5;

  std::size_t degree() const { return coeffs.size() == 0 ? 0 : std::size_t(coeffs.size() - 1); }
  Complex operator()(Complex s) const;
  // drop leading coefficients below rel·max|c|
  void trim(double rel = 1e-300);
};

enum class RootClass { unclassified, on_critical_line, off_line, outside_strip, prefactor_zero };

const char* to_string(RootClass c) noexcept;
RootClass parse_root_class(std::string_view name);

struct RootSet {
  Eigen::VectorXcd roots;
  std::vector<RootClass> classes;
  std::vector<bool> polished;
  double tau = 0.05;
  std::size_t sweeps = 0;
  double max_residual = 0.0;
  bool converged = true;
};

struct RootFinderOptions {
  std::size_t max_sweeps = 500;
  std::uint64_t seed = 0;
  bool use_parity = true;  // solve even polynomials in (s-center)^2
};

Eigen::VectorXcd approximant_coefficients(const ApproximantSpec& spec);
Complex approximant_value(const ApproximantSpec& spec, Complex s);
// Clearing factor binom(s/2+n-1+Δ, n) binom((1-s)/2+n-1+Δ, n)
Complex approximant_denominator(const ApproximantSpec& spec, Complex s);
PolynomialC approximant_polynomial(const ApproximantSpec& spec);
PolynomialC upsilon_approximant_polynomial(std::size_t k, double delta);
// Experimental: Gauss continued-fraction convergents in place of Γ(s,z).
PolynomialC cf_approximant_polynomial(std::size_t level, std::size_t z_max);

RootSet find_roots(const PolynomialC& p, double tol = 1e-10, const RootFinderOptions& opt = {});
RootSet classify_roots(RootSet rs, const ApproximantSpec& spec, double tau = 0.05, double prefactor_tau = 0.25);

// Roots sorted by Im, then Re, with classes and flags permuted alongside.
RootSet sorted(RootSet rs);

enum class ExportFormat { csv, json, gnuplot };
ExportFormat parse_export_format(std::string_view name);

void export_rootset(const RootSet& rs, const std::filesystem::path& path, ExportFormat format);
RootSet import_rootset_json(const std::filesystem::path& path);

}  // namespace zetakit
