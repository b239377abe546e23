#include "zetakit/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <thread>

#include "zetakit/approx_zeros.hpp"
#include "zetakit/format.hpp"
#include "zetakit/incgamma.hpp"
#include "zetakit/kummer.hpp"
#include "zetakit/laguerre.hpp"
#include "zetakit/selftest.hpp"
#include "zetakit/zeta.hpp"

namespace zetakit::cli {

namespace {

using nlohmann::json;

double env_tol() {
  const char* v = std::getenv("ZETAKIT_TOL");
  if (!v || !*v) return 1e-14;
  const double t = parse_double(v);
  if (!(t > 0.0)) throw ParseError("ZETAKIT_TOL must be positive");
  return t;
}

std::vector<double> parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw ParseError("range must be a:b:n, got '" + text + "'");
  const double a = parse_double(parts[0]);
  const double b = parse_double(parts[1]);
  const double n = parse_double(parts[2]);
  if (!(n >= 1.0) || n != std::floor(n)) throw ParseError("range count must be a positive integer");
  std::vector<double> v(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = v.size() == 1 ? a : a + (b - a) * double(i) / double(v.size() - 1);
  return v;
}

std::string pair(Complex z) { return format_double(z.real()) + " " + format_double(z.imag()); }

void emit_json(std::ostream& out, const json& inputs, const json& outputs, const json& diagnostics) {
  out << json{{"inputs", inputs}, {"outputs", outputs}, {"diagnostics", diagnostics}}.dump(2) << '\n';
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct ZetaPoint {
  Complex s;
  Complex zeta;
  double tail = 0.0;
  std::string error;
};

ZetaPoint eval_point(Complex s, ZetaMethod method, std::size_t K, Complex x) {
  ZetaPoint p{s, {}, 0.0, {}};
  try {
    p.zeta = zeta_value(s, method, K, x);
    switch (method) {
      case ZetaMethod::basic: p.tail = xi_basic(s, K).tail_bound; break;
      case ZetaMethod::general: p.tail = xi_general(s, x, K).tail_bound; break;
      case ZetaMethod::upsilon: p.tail = xi_upsilon(s, x, K).tail_bound; break;
    }
  } catch (const Error& e) {
    p.zeta = Complex(NAN, NAN);
    p.tail = NAN;
    p.error = e.what();
  }
  return p;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.tol = env_tol();
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"zetakit: completed zeta function, incomplete gamma, Kummer and Laguerre toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--tol", cfg.tol, "Default tolerance (env ZETAKIT_TOL)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--seed", cfg.seed, "Root-finder perturbation seed");
  app.add_option("--threads", cfg.threads, "Worker threads for grid evaluation")->check(CLI::PositiveNumber);

  std::function<void()> action;
  auto fmt = [&] {
    if (format == "json") return OutputFormat::json;
    if (format == "csv") return OutputFormat::csv;
    return OutputFormat::text;
  };

  // zeta
  auto* zeta = app.add_subcommand("zeta", "Completed zeta function and zeta values");
  zeta->require_subcommand(1);
  std::string method_name = "basic", x_text = "1", s_text;
  std::size_t K = cfg.K;

  auto* eval = zeta->add_subcommand("eval", "Evaluate zeta(s) and the completed function");
  eval->add_option("s", s_text, "Point s (a+bi or a,b)")->required();
  eval->add_option("--method", method_name)->check(CLI::IsMember({"basic", "general", "upsilon"}));
  eval->add_option("--x", x_text, "Free parameter x, Re(x) > |Im(x)|");
  eval->add_option("--K", K, "Number of series terms");
  eval->callback([&] {
    action = [&] {
      const Complex s = parse_complex(s_text);
      const Complex x = parse_complex(x_text);
      ZetaMethod m = parse_zeta_method(method_name);
      // the basic series is the x = 1 case of the general one
      if (m == ZetaMethod::basic && x != Complex(1.0)) m = ZetaMethod::general;
      const Complex z = zeta_value(s, m, K, x);
      CompletedZetaValue xi;
      switch (m) {
        case ZetaMethod::basic: xi = xi_basic(s, K); break;
        case ZetaMethod::general: xi = xi_general(s, x, K); break;
        case ZetaMethod::upsilon: xi = xi_upsilon(s, x, K); break;
      }
      switch (fmt()) {
        case OutputFormat::text: out << pair(z) << '\n'; break;
        case OutputFormat::csv:
          out << csv_row({"sigma", "t", "re", "im", "K", "tail_bound"})
              << csv_row({format_double(s.real()), format_double(s.imag()), format_double(z.real()),
                          format_double(z.imag()), std::to_string(K), format_double(xi.tail_bound)});
          break;
        case OutputFormat::json:
          emit_json(out, {{"s", complex_json(s)}, {"method", to_string(m)}, {"x", complex_json(x)}, {"K", K}},
                    {{"zeta", complex_json(z)}, {"xi", complex_json(xi.xi)}}, {{"tail_bound", xi.tail_bound}});
          break;
      }
    };
  });

  std::string sigma_range, t_range, out_path;
  auto* grid = zeta->add_subcommand("grid", "Evaluate zeta on a rectangular grid");
  grid->add_option("--sigma", sigma_range, "a:b:n")->required();
  grid->add_option("--t", t_range, "a:b:n")->required();
  grid->add_option("--out", out_path, "Output file (default stdout)");
  grid->add_option("--method", method_name)->check(CLI::IsMember({"basic", "general", "upsilon"}));
  grid->add_option("--x", x_text);
  grid->add_option("--K", K);
  grid->callback([&] {
    action = [&] {
      const auto sig = parse_range(sigma_range);
      const auto ts = parse_range(t_range);
      const Complex x = parse_complex(x_text);
      ZetaMethod m = parse_zeta_method(method_name);
      if (m == ZetaMethod::basic && x != Complex(1.0)) m = ZetaMethod::general;
      std::vector<ZetaPoint> pts(sig.size() * ts.size());
      const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, unsigned(pts.size())));
      {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
          pool.emplace_back([&, w] {
            for (std::size_t i = w; i < pts.size(); i += workers)
              pts[i] = eval_point({sig[i / ts.size()], ts[i % ts.size()]}, m, K, x);
          });
      }
      std::ofstream file;
      std::ostream* sink = &out;
      if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) throw Error(ErrorKind::io, "cannot open '" + out_path + "'");
        sink = &file;
      }
      if (fmt() == OutputFormat::json) {
        json rows = json::array();
        for (const auto& p : pts) {
          json r = {{"sigma", p.s.real()}, {"t", p.s.imag()}, {"re", p.zeta.real()}, {"im", p.zeta.imag()},
                    {"K", K}, {"tail_bound", p.tail}};
          if (!p.error.empty()) r["error"] = p.error;
          rows.push_back(r);
        }
        emit_json(*sink, {{"sigma", sigma_range}, {"t", t_range}, {"method", to_string(m)}, {"K", K}},
                  {{"points", rows}}, {{"threads", workers}});
      } else {
        *sink << csv_row({"sigma", "t", "re", "im", "K", "tail_bound"});
        for (const auto& p : pts)
          *sink << csv_row({format_double(p.s.real()), format_double(p.s.imag()), format_double(p.zeta.real()),
                            format_double(p.zeta.imag()), std::to_string(K), format_double(p.tail)});
      }
      for (const auto& p : pts)
        if (!p.error.empty()) err << "warning: s = " << pair(p.s) << ": " << p.error << '\n';
    };
  });

  std::size_t k_max = 8;
  auto* conv = zeta->add_subcommand("convergence", "Truncation error of the basic series against K");
  conv->add_option("s", s_text)->required();
  conv->add_option("--Kmax", k_max, "Reference truncation")->check(CLI::Range(2, 12));
  conv->callback([&] {
    action = [&] {
      const Complex s = parse_complex(s_text);
      std::vector<double> k2, k12, y;
      json rows = json::array();
      if (fmt() == OutputFormat::text) out << "K |xi(K)-xi(Kmax)|\n";
      for (std::size_t k = 0; k < k_max; ++k) {
        const double d = std::abs(xi_basic_tail(s, k + 1, k_max));
        rows.push_back({{"K", k}, {"difference", d}});
        if (fmt() == OutputFormat::text) out << k << ' ' << format_double(d) << '\n';
        if (k >= 1 && k <= 4 && d > 0.0) {
          k2.push_back(double(k * k));
          k12.push_back(double((k + 1) * (k + 1)));
          y.push_back(std::log(d));
        }
      }
      const double s1 = slope(k12, y), s2 = slope(k2, y);
      if (fmt() == OutputFormat::json) {
        emit_json(out, {{"s", complex_json(s)}, {"Kmax", k_max}}, {{"rows", rows}},
                  {{"slope_vs_first_omitted_sq", s1}, {"slope_vs_K_sq", s2}, {"expected", -pi}});
      } else {
        out << "slope vs (K+1)^2: " << format_double(s1) << " (" << format_double(s1 / pi) << " pi)\n";
        out << "slope vs K^2:     " << format_double(s2) << " (" << format_double(s2 / pi) << " pi)\n";
      }
    };
  });

  std::string check = "funceq";
  std::string id_s = "3", id_x = "1.2";
  auto* ident = zeta->add_subcommand("identity", "Residuals of the representation identities");
  ident->add_option("--check", check)->required()->check(CLI::IsMember({"fourier", "funceq", "xindep"}));
  ident->add_option("--s", id_s);
  ident->add_option("--x", id_x);
  ident->add_option("--K", K);
  ident->callback([&] {
    action = [&] {
      const Complex s = parse_complex(id_s);
      const Complex x = parse_complex(id_x);
      double r = 0.0;
      if (check == "fourier") r = fourier_gamma_residual(s, x, K);
      else if (check == "funceq") r = std::abs(xi_basic(s, K).xi - xi_basic(1.0 - s, K).xi);
      else r = std::abs(xi_general(s, x, K).xi - xi_basic(s, K).xi);
      if (fmt() == OutputFormat::json)
        emit_json(out, {{"check", check}, {"s", complex_json(s)}, {"x", complex_json(x)}, {"K", K}},
                  {{"residual", r}}, json::object());
      else out << check << " residual " << format_double(r) << '\n';
    };
  });

  // gamma
  std::string kind, z_text, gamma_method = "cf", alpha_text, parity = "odd";
  std::size_t level = 0;
  auto* gam = app.add_subcommand("gamma", "Incomplete gamma functions (JSON output)");
  gam->add_option("kind", kind)->required()->check(CLI::IsMember({"upper", "lower"}));
  gam->add_option("s", s_text)->required();
  gam->add_option("z", z_text)->required();
  gam->add_option("--method", gamma_method)->check(CLI::IsMember({"cf", "sum", "limit", "series"}));
  gam->add_option("--k", level, "Convergent level or number of series terms");
  gam->add_option("--alpha", alpha_text, "Laguerre order for --method series");
  gam->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd"}));
  gam->callback([&] {
    action = [&] {
      const Complex s = parse_complex(s_text);
      const Complex z = parse_complex(z_text);
      json inputs = {{"kind", kind}, {"s", complex_json(s)}, {"z", complex_json(z)}, {"tol", cfg.tol}};
      json diag = json::object();
      Complex value;
      if (kind == "lower") {
        const SeriesResult r = lower_gamma_series(s, z, cfg.tol);
        value = r.value;
        inputs["method"] = "series";
        diag = {{"terms_used", r.terms_used}, {"tail_estimate", r.tail_estimate}, {"cancellation_warning", r.cancellation_warning}};
      } else {
        inputs["method"] = gamma_method;
        const Complex pre = std::exp(s * log_principal(z) - z);
        const ConvergentParity par = parity == "even" ? ConvergentParity::even : ConvergentParity::odd;
        if (gamma_method == "cf") {
          const SeriesResult r = upper_gamma_cf(s, z, cfg.tol);
          value = r.value;
          diag = {{"levels", r.terms_used}, {"tail_estimate", r.tail_estimate}, {"complemented", r.complemented}};
        } else if (gamma_method == "sum") {
          const std::size_t k = level ? level : 30;
          value = pre * upper_gamma_convergent_sum(s, z, k, par);
          inputs["k"] = k;
          inputs["parity"] = parity;
        } else if (gamma_method == "limit") {
          const std::size_t k = level ? level : 40;
          value = pre * upper_gamma_laguerre_limit(s, z, k, par);
          inputs["k"] = k;
          inputs["parity"] = parity;
        } else {
          const std::size_t n = level ? level : 400;
          const Complex alpha = alpha_text.empty() ? Complex(std::ceil(2.0 * s.real()) + 2.0) : parse_complex(alpha_text);
          const SeriesResult r = upper_gamma_laguerre_series(s, z, alpha, n);
          value = r.value;
          inputs["N"] = n;
          inputs["alpha"] = complex_json(alpha);
          diag = {{"terms_used", r.terms_used}, {"tail_estimate", r.tail_estimate}};
        }
      }
      emit_json(out, inputs, {{"value", complex_json(value)}}, diag);
    };
  });

  // laguerre
  std::string i_text, a_text, beta_text, sign = "plus";
  bool asymptotic = false;
  auto* lag = app.add_subcommand("laguerre", "Generalized Laguerre polynomials, printed as 're im'");
  lag->add_option("i", i_text)->required();
  lag->add_option("alpha", a_text)->required();
  lag->add_option("z", z_text)->required();
  lag->add_option("--shifted", beta_text, "Evaluate L_i^(beta-i)(z) instead; alpha is ignored");
  lag->add_flag("--asymptotic", asymptotic, "Also print the large-degree estimate");
  lag->add_option("--sign", sign, "Asymptotic branch: plus at z, minus at -z")->check(CLI::IsMember({"plus", "minus"}));
  lag->callback([&] {
    action = [&] {
      const double di = parse_double(i_text);
      if (!(di >= 0.0) || di != std::floor(di)) throw ParseError("degree i must be a non-negative integer");
      const std::size_t i = std::size_t(di);
      const Complex alpha = parse_complex(a_text);
      const Complex z = parse_complex(z_text);
      std::vector<Complex> values;
      if (!beta_text.empty()) {
        values.push_back(laguerre_shifted_recur(i, parse_complex(beta_text), z));
      } else {
        const bool minus = asymptotic && sign == "minus";
        values.push_back(laguerre_recur({i, alpha, minus ? -z : z}));
        if (asymptotic)
          values.push_back(laguerre_asymptotic({i, alpha, z}, minus ? AsymptoticSign::minus : AsymptoticSign::plus));
      }
      if (fmt() == OutputFormat::json) {
        json v = json::array();
        for (const Complex c : values) v.push_back(complex_json(c));
        emit_json(out, {{"i", i}, {"alpha", complex_json(alpha)}, {"z", complex_json(z)}, {"shifted", beta_text}, {"asymptotic", asymptotic}, {"sign", sign}},
                  {{"values", v}}, json::object());
      } else {
        for (const Complex c : values) out << pair(c) << '\n';
      }
    };
  });

  // kummer
  std::string which, b_text;
  std::vector<std::string> lag_opt;
  bool integer_b = false;
  auto* kum = app.add_subcommand("kummer", "Kummer functions M and U, printed as 're im'");
  kum->add_option("which", which)->required()->check(CLI::IsMember({"M", "U"}));
  kum->add_option("a", a_text)->required();
  kum->add_option("b", b_text)->required();
  kum->add_option("z", z_text)->required();
  kum->add_option("--laguerre", lag_opt, "Laguerre expansion: parameter (beta for M, alpha for U) and N")->expected(2);
  kum->add_flag("--integer-b", integer_b, "For U at integer b: average of b +/- 1e-6");
  kum->callback([&] {
    action = [&] {
      const KummerParams p{parse_complex(a_text), parse_complex(b_text), parse_complex(z_text)};
      SeriesResult r;
      if (!lag_opt.empty()) {
        const Complex param = parse_complex(lag_opt[0]);
        const double n = parse_double(lag_opt[1]);
        if (!(n >= 0.0) || n != std::floor(n)) throw ParseError("N must be a non-negative integer");
        r = which == "M" ? kummer_m_laguerre(p, param, std::size_t(n)) : kummer_u_laguerre(p, param, std::size_t(n));
      } else if (which == "M") {
        r = kummer_m_series(p, cfg.tol);
      } else {
        r = integer_b ? kummer_u_integer_b(p, cfg.tol) : kummer_u(p, cfg.tol);
      }
      if (fmt() == OutputFormat::json)
        emit_json(out, {{"function", which}, {"a", complex_json(p.a)}, {"b", complex_json(p.b)}, {"z", complex_json(p.z)}, {"laguerre", lag_opt}},
                  {{"value", complex_json(r.value)}},
                  {{"terms_used", r.terms_used}, {"tail_estimate", r.tail_estimate}, {"cancellation_warning", r.cancellation_warning}});
      else out << pair(r.value) << '\n';
    };
  });

  // zeros
  ApproximantSpec spec;
  std::string variant = "laguerre", plot_path, zeros_out;
  double tau = 0.05, prefactor_tau = 0.25;
  auto* zeros = app.add_subcommand("zeros", "Roots of the polynomial approximants");
  zeros->add_option("--delta", spec.delta)->check(CLI::PositiveNumber);
  zeros->add_option("--n", spec.n, "Degree control (k for the upsilon variant)")->check(CLI::Range(1, 60));
  zeros->add_option("--variant", variant)->check(CLI::IsMember({"laguerre", "upsilon", "cf"}));
  zeros->add_option("--zmax", spec.z_max)->check(CLI::Range(3, 50));
  zeros->add_option("--level", spec.cf_level, "Convergent level for the cf variant");
  zeros->add_option("--tau", tau)->check(CLI::PositiveNumber);
  zeros->add_option("--prefactor-tau", prefactor_tau)->check(CLI::PositiveNumber);
  zeros->add_option("--out", zeros_out, "Root file (.json for JSON, otherwise CSV)");
  zeros->add_option("--plot", plot_path, "gnuplot script");
  zeros->callback([&] {
    action = [&] {
      spec.variant = parse_variant(variant);
      const PolynomialC poly = approximant_polynomial(spec);
      RootFinderOptions opt;
      opt.seed = cfg.seed;
      const RootSet rs = sorted(classify_roots(find_roots(poly, 1e-10, opt), spec, tau, prefactor_tau));
      if (!zeros_out.empty()) {
        const bool as_json = zeros_out.size() >= 5 && zeros_out.substr(zeros_out.size() - 5) == ".json";
        export_rootset(rs, zeros_out, as_json ? ExportFormat::json : ExportFormat::csv);
      }
      if (!plot_path.empty()) export_rootset(rs, plot_path, ExportFormat::gnuplot);
      std::map<std::string, int> counts;
      for (const RootClass c : rs.classes) ++counts[to_string(c)];
      if (fmt() == OutputFormat::json) {
        json roots = json::array();
        for (Eigen::Index i = 0; i < rs.roots.size(); ++i)
          roots.push_back({{"re", rs.roots(i).real()}, {"im", rs.roots(i).imag()}, {"class", to_string(rs.classes[std::size_t(i)])}});
        emit_json(out, {{"delta", spec.delta}, {"n", spec.n}, {"variant", variant}, {"z_max", spec.z_max}, {"tau", tau}, {"seed", cfg.seed}},
                  {{"degree", poly.degree()}, {"roots", roots}, {"counts", counts}},
                  {{"sweeps", rs.sweeps}, {"converged", rs.converged}, {"max_residual", rs.max_residual}});
      } else {
        out << "degree " << poly.degree() << ", roots " << rs.roots.size() << ", sweeps " << rs.sweeps
            << (rs.converged ? "" : " (not converged)") << ", max residual " << format_double(rs.max_residual) << '\n';
        for (const auto& [name, c] : counts) out << name << ' ' << c << '\n';
        if (zeros_out.empty())
          for (Eigen::Index i = 0; i < rs.roots.size(); ++i) out << pair(rs.roots(i)) << ' ' << to_string(rs.classes[std::size_t(i)]) << '\n';
      }
    };
  });

  auto* self = app.add_subcommand("selftest", "Run the invariant suite");
  int self_status = 0;
  self->callback([&] {
    action = [&] {
      const auto results = run_selftest();
      print_selftest(results, out);
      for (const auto& r : results)
        if (!r.pass) self_status = 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.format = fmt();

  try {
    if (action) action();
    return self_status;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace zetakit::cli
