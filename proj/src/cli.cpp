#include "bclass/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bclass/compose.hpp"
#include "bclass/dtransform.hpp"
#include "bclass/errors.hpp"
#include "bclass/reproduction.hpp"
#include "bclass/symseries.hpp"
#include "table_json.hpp"

namespace bclass {

namespace {

/// Failure with a chosen exit code; the message becomes the stderr line.
struct CliFailure {
  int code;
  std::string message;
};

std::string join_orders(const std::vector<std::optional<long>>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i] ? std::to_string(*v[i]) : "-";
  }
  return out + ")";
}

std::vector<int> parse_exponent_mode(const std::string& mode, int m) {
  if (mode == "friendly") return friendly_exponents(m);
  if (mode.rfind("rho:", 0) != 0) throw CliFailure{exit_parse, "exponent mode must be 'friendly' or 'rho:e1,...,em'"};
  std::vector<int> out;
  std::stringstream ss(mode.substr(4));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CliFailure{exit_parse, "malformed exponent '" + item + "'"};
    }
  }
  if (out.size() != static_cast<std::size_t>(m))
    throw CliFailure{exit_precondition, "exponent mode needs exactly m = " + std::to_string(m) + " entries"};
  return out;
}

void emit_table(const ExtrapolationTable& table, const std::string& format, std::ostream& out) {
  if (format == "csv")
    write_csv(table, out);
  else if (format == "json")
    write_json(table, out);
  else
    write_pretty(table, out);
}

void emit_reproduction(const ReproductionRun& run, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array({detail::table_to_json(run.f), detail::table_to_json(run.phi)});
    out << doc.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    out << "integrand,nu,F_error,D_error,residual\n";
    for (const auto* t : {&run.f, &run.phi}) {
      std::ostringstream body;
      write_csv(*t, body);
      std::istringstream lines(body.str());
      std::string line;
      std::getline(lines, line);  // header
      while (std::getline(lines, line)) out << t->integrand << ',' << line << '\n';
    }
    return;
  }
  out << "D(3) transformation: f = " << run.f.integrand << " on " << run.f.grid << ", phi = " << run.phi.integrand
      << " on " << run.phi.grid << "\n\n";
  out << std::setw(4) << "nu" << std::setw(14) << "|F-I[f]|" << std::setw(14) << "|D-I[f]|" << std::setw(14)
      << "|Phi-I[phi]|" << std::setw(14) << "|D-I[phi]|" << '\n';
  for (std::size_t i = 0; i < run.f.entries.size(); ++i) {
    const auto& a = run.f.entries[i];
    const auto& b = run.phi.entries[i];
    out << std::setw(4) << a.nu << std::setw(14) << d_notation(*a.F_error) << std::setw(14) << d_notation(*a.D_error)
        << std::setw(14) << d_notation(*b.F_error) << std::setw(14) << d_notation(*b.D_error) << '\n';
  }
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw CliFailure{exit_precondition, "cannot open output file '" + path + "'"};
  file << text;
}

GeneralizedRational parse_or_fail(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw CliFailure{exit_parse, std::string(what) + ": " + e.what()};
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Composition of class-B ODE coefficients and D(m) acceleration of infinite-range integrals", "bclass"};
  app.require_subcommand(1);

  std::string format = "pretty";
  std::string output;
  int nu_max = 10;
  int q = default_gauss_points;

  auto* reproduce = app.add_subcommand("reproduce-table", "Run the built-in sinc^2 benchmark pair and check it");
  reproduce->add_option("--format", format, "pretty, csv or json")->check(CLI::IsMember({"pretty", "csv", "json"}));
  reproduce->add_option("--nu-max", nu_max, "Largest nu")->check(CLI::Range(0, 10));
  reproduce->add_option("--q", q, "Gauss points per panel")->check(CLI::Range(1, 32));
  reproduce->add_option("--output", output, "Output file (default stdout)");

  std::vector<std::string> p_texts;
  std::string g_text;
  auto* compose = app.add_subcommand("compose", "Transform ODE coefficients p_1..p_m under x -> g(x)");
  compose->add_option("--p", p_texts, "Coefficient p_k, repeated in order k = 1..m")->required();
  compose->add_option("--g", g_text, "Inner polynomial g")->required();

  std::string f_text;
  auto* check_b1 = app.add_subcommand("check-b1", "Test whether p_1 = f/f' has the first-order class form");
  check_b1->add_option("f", f_text, "Generalized rational function")->required();

  std::string integrand_text, builtin_name, grid_text, reference_text, exponent_mode = "friendly";
  int m = 3;
  std::size_t j = 0;
  auto* accelerate = app.add_subcommand("accelerate", "Apply the D(m) transformation to int_0^inf f");
  auto* integrand_opt = accelerate->add_option("--integrand", integrand_text, "Integrand expression in x");
  auto* builtin_opt = accelerate->add_option("--builtin", builtin_name, "Built-in integrand (sinc2, sinc2-of-square)");
  integrand_opt->excludes(builtin_opt);
  accelerate->add_option("--m", m, "Order m")->check(CLI::PositiveNumber);
  accelerate->add_option("--grid", grid_text, "Grid descriptor, e.g. linear:1.6 or sqrtlinear:1.6");
  accelerate->add_option("--nu-max", nu_max, "Largest nu")->check(CLI::NonNegativeNumber);
  accelerate->add_option("--reference", reference_text, "Exact value, e.g. pi/2");
  accelerate->add_option("--exponents", exponent_mode, "friendly or rho:e1,...,em");
  accelerate->add_option("--j", j, "Window start index");
  accelerate->add_option("--q", q, "Gauss points per panel")->check(CLI::Range(1, 32));
  accelerate->add_option("--format", format, "pretty, csv or json")->check(CLI::IsMember({"pretty", "csv", "json"}));
  accelerate->add_option("--output", output, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_parse;
  }

  std::ostringstream buffer;
  try {
    if (*reproduce) {
      const ReproductionRun run = reproduce_table(nu_max, q);
      if (!run.violations.empty()) throw CliFailure{exit_tolerance, run.violations.front()};
      emit_reproduction(run, format, buffer);
      write_output(buffer.str(), output, out);
      return exit_ok;
    }

    if (*compose) {
      std::vector<GeneralizedRational> p;
      for (std::size_t k = 0; k < p_texts.size(); ++k)
        p.push_back(parse_or_fail(p_texts[k], ("p_" + std::to_string(k + 1)).c_str()));
      GeneralizedPolynomial g;
      try {
        g = parse_polynomial(g_text);
      } catch (const ParseError& e) {
        throw CliFailure{exit_parse, std::string("g: ") + e.what()};
      }
      const OdeCoefficients ode(std::move(p));
      const CompositionResult res = compose_ode(ode, g);
      for (std::size_t k = 0; k < res.pi.size(); ++k)
        buffer << "pi_" << k + 1 << " = " << to_string(res.pi[k]) << '\n';
      std::vector<std::optional<long>> i_orders;
      for (int k = 1; k <= ode.order(); ++k) i_orders.push_back(ode.i(k));
      buffer << "s = " << res.s << '\n'
             << "i = " << join_orders(i_orders) << '\n'
             << "r = " << join_orders(res.r) << '\n'
             << "r_bound_recursive = " << join_orders(res.r_bound_recursive) << '\n'
             << "r_bound_closed = " << join_orders(res.r_bound_closed) << '\n';
      bool out_b = true;
      for (std::size_t k = 0; k < res.r.size(); ++k)
        if (res.r[k] && *res.r[k] > static_cast<long>(k) + 1) out_b = false;
      buffer << "input_class_B = " << (ode.is_class_b() ? "yes" : "no") << '\n'
             << "output_class_B = " << (out_b ? "yes" : "no") << '\n';
      out << buffer.str();
      return exit_ok;
    }

    if (*check_b1) {
      const GeneralizedRational f = parse_or_fail(f_text, "f");
      if (f.step_denominator() > 2)
        throw CliFailure{exit_precondition, "check-b1 supports exponents with denominator at most 2"};
      const B1Report rep = verify_b1_membership(f);
      buffer << "f = " << to_string(f) << '\n'
             << "p_1 = " << to_string(rep.p1) << '\n'
             << "gamma = " << rep.p1_profile.gamma.get_str() << '\n'
             << "integer_step = " << (rep.p1_profile.integer_step ? "true" : "false") << '\n'
             << "member = " << (rep.member ? "yes" : "no") << '\n';
      out << buffer.str();
      return exit_ok;
    }

    if (*accelerate) {
      if (integrand_text.empty() == builtin_name.empty())
        throw CliFailure{exit_parse, "exactly one of --integrand or --builtin is required"};
      Expression integrand;
      if (!builtin_name.empty()) {
        const BuiltinIntegrand* b = find_builtin(builtin_name);
        if (!b) throw CliFailure{exit_parse, "unknown builtin '" + builtin_name + "'"};
        integrand = parse_expression(b->expression);
        if (grid_text.empty()) grid_text = std::string(b->grid);
        if (reference_text.empty()) reference_text = std::string(b->reference);
        if (accelerate->count("--m") == 0) m = b->m;
      } else {
        integrand = parse_expression(integrand_text);
      }
      if (grid_text.empty()) throw CliFailure{exit_parse, "--grid is required"};
      DSequenceOptions options;
      options.m = m;
      options.nu_max = nu_max;
      options.j = j;
      options.q = q;
      options.exponents = parse_exponent_mode(exponent_mode, m);
      if (!reference_text.empty()) options.reference = evaluate_constant(reference_text);
      SampleGrid grid;
      try {
        grid = make_grid(grid_text, j + static_cast<std::size_t>(m) * static_cast<std::size_t>(nu_max) + 1);
      } catch (const std::invalid_argument& e) {
        throw CliFailure{exit_parse, std::string("grid: ") + e.what()};
      }
      const ExtrapolationTable table = d_sequence(integrand, grid, options);
      emit_table(table, format, buffer);
      write_output(buffer.str(), output, out);
      return exit_ok;
    }
  } catch (const CliFailure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_parse;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return exit_precondition;
  } catch (const DSequenceError& e) {
    err << "error: singular system at " << e.what() << '\n';
    return exit_numerical;
  } catch (const SingularSystemError& e) {
    err << "error: " << e.what() << '\n';
    return exit_numerical;
  } catch (const IntegrationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_numerical;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_numerical;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << '\n';
    return exit_precondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_precondition;
  }
  return exit_parse;
}

}  // namespace bclass
