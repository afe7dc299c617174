#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gauss/modp.h"
#include "gauss/report.h"
#include "gauss/spectral.h"
#include "gauss/verify.h"

namespace gauss::cli {
namespace {

using nlohmann::ordered_json;

struct Options {
  std::string statement;
  std::int64_t p = 0;
  std::int64_t n = 2;
  std::string function;
  std::int64_t index = 0;
  std::uint64_t budget = EnumerationBudget{}.max_functions;
  std::string output = "table";
  bool witnesses = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::uint64_t default_budget() {
  const char* env = std::getenv(kBudgetEnvVar);
  if (env == nullptr || *env == '\0') return EnumerationBudget{}.max_functions;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) {
    throw UsageError(std::string(kBudgetEnvVar) + " must be a positive decimal integer");
  }
  return v;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string coeff_list(const CyclotomicElement& z) {
  std::string s = "[";
  for (std::size_t i = 0; i < z.coeffs().size(); ++i) {
    if (i > 0) s += ", ";
    s += z.coeffs()[i].get_str();
  }
  return s + "]";
}

// Integers are emitted as JSON numbers when they fit, else as strings.
ordered_json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ordered_json element_json(const CyclotomicElement& z) {
  ordered_json j;
  j["order"] = z.context().order;
  j["coeffs"] = ordered_json::array();
  for (const Integer& c : z.coeffs()) j["coeffs"].push_back(integer_json(c));
  auto v = as_integer(z);
  j["integer"] = v ? integer_json(*v) : ordered_json(nullptr);
  return j;
}

void print_element(std::ostream& out, const std::string& name, const CyclotomicElement& z) {
  out << name << ".order=" << z.context().order << "\n";
  out << name << ".coeffs=" << coeff_list(z) << "\n";
  if (auto v = as_integer(z)) out << name << ".integer=" << v->get_str() << "\n";
}

void print_report_header(std::ostream& out) {
  out << std::left << std::setw(20) << "statement" << std::setw(5) << "p" << std::setw(5) << "n"
      << std::setw(11) << "functions" << std::setw(10) << "spectral" << std::setw(8) << "oracle"
      << std::setw(12) << "mismatches" << std::setw(12) << "elapsed_ms" << "result\n";
}

void print_report_row(std::ostream& out, const VerificationReport& r, bool witnesses) {
  out << std::left << std::setw(20) << r.statement << std::setw(5) << r.p << std::setw(5) << r.n
      << std::setw(11) << r.total_functions << std::setw(10) << r.passing_spectral
      << std::setw(8) << r.passing_oracle << std::setw(12) << r.mismatches.size()
      << std::setw(12) << r.elapsed_ms << (r.success ? "PASS" : "FAIL") << "\n";
  if (r.error) out << "  error: " << *r.error << "\n";
  for (const auto& [key, value] : r.details) out << "  " << key << "=" << value << "\n";
  for (const auto& m : r.mismatches) out << "  mismatch exps=" << join(m) << "\n";
  if (witnesses) {
    for (const Witness& w : r.witnesses) {
      out << "  witness exps=" << join(w.exps);
      if (w.a) out << " a=" << *w.a;
      out << "\n";
    }
  }
}

void emit_reports(std::ostream& out, const Options& opt,
                  const std::vector<VerificationReport>& reports) {
  if (opt.output == "json") {
    for (const auto& r : reports) out << serialize_report(r) << "\n";
    return;
  }
  print_report_header(out);
  for (const auto& r : reports) print_report_row(out, r, opt.witnesses);
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const EnumerationBudget budget{opt.budget};
  std::vector<VerificationReport> reports;
  if (opt.statement == "all") {
    const auto grid = default_grid();
    reports = verify_grid(grid, budget);
  } else {
    auto statement = parse_statement(opt.statement);
    if (!statement) throw UsageError("unknown statement '" + opt.statement + "'");
    GridCell cell{*statement, opt.p, opt.n};
    if (*statement == Statement::kRemarkCounterexample) {
      cell = {*statement, 3, 6};
    } else if (opt.p == 0) {
      throw UsageError("--p is required for statement " + opt.statement);
    }
    reports.push_back(run_cell(cell, budget));
  }
  emit_reports(out, opt, reports);
  return all_succeeded(reports) ? kExitSuccess : kExitMismatch;
}

int cmd_search(const Options& opt, std::ostream& out) {
  std::vector<VerificationReport> reports{
      search_p_divides_n(PrimeModulus(opt.p), UnityOrder(opt.n), EnumerationBudget{opt.budget})};
  emit_reports(out, opt, reports);
  return reports.front().success ? kExitSuccess : kExitMismatch;
}

int cmd_classify(const Options& opt, std::ostream& out, std::ostream& err) {
  const UnitFunction f = parse_unit_function(opt.function);
  const bool oracle = is_character_oracle(f);
  const bool trivial = f.is_trivial();

  std::optional<std::string> not_applicable;
  if (f.order().value() % f.prime().value() == 0) {
    not_applicable = "p divides n";
  } else if (f.exp_at(1) != 0) {
    not_applicable = "f(1) != 1";
  }
  std::optional<SpectralVerdict> verdict;
  if (!not_applicable) verdict = spectral_character_test(f);
  else err << "warning: hypothesis violated: " << *not_applicable
           << "; spectral verdict not applicable\n";

  const bool disagreement = verdict && verdict->is_character != (oracle && !trivial);

  if (opt.output == "json") {
    ordered_json j;
    j["function"] = f.to_string();
    j["oracle"] = oracle;
    j["trivial"] = trivial;
    j["spectral"] = verdict ? ordered_json(verdict->is_character) : ordered_json("not-applicable");
    j["witness"] = verdict && verdict->witness ? ordered_json(*verdict->witness) : ordered_json(nullptr);
    j["character"] = oracle;
    j["agreement"] = !disagreement;
    out << j.dump() << "\n";
  } else {
    out << "function=" << f.to_string() << "\n";
    out << "oracle=" << (oracle ? "true" : "false") << "\n";
    out << "trivial=" << (trivial ? "true" : "false") << "\n";
    if (verdict) {
      out << "spectral=" << (verdict->is_character ? "true" : "false") << "\n";
      if (verdict->witness) out << "witness=" << *verdict->witness << "\n";
    } else {
      out << "spectral=not-applicable (" << *not_applicable << ")\n";
    }
    out << "character=" << (oracle ? "true" : "false") << "\n";
  }
  if (disagreement) {
    err << "internal error: spectral test and homomorphism oracle disagree on "
        << f.to_string() << "\n";
    return kExitMismatch;
  }
  return kExitSuccess;
}

int cmd_gauss_sum(const Options& opt, std::ostream& out) {
  const UnitFunction f = parse_unit_function(opt.function);
  const CyclotomicElement tau = gauss_sum(f).value;
  const CyclotomicElement norm = norm_squared(tau);
  const auto norm_int = as_integer(norm);
  const bool equals_p = norm_int && *norm_int == f.prime().value();
  if (opt.output == "json") {
    ordered_json j;
    j["function"] = f.to_string();
    j["gauss_sum"] = element_json(tau);
    j["norm_squared"] = element_json(norm);
    j["norm_squared_equals_p"] = equals_p;
    out << j.dump() << "\n";
  } else {
    print_element(out, "gauss_sum", tau);
    print_element(out, "norm_squared", norm);
    out << "norm_squared_equals_p=" << (equals_p ? "true" : "false") << "\n";
  }
  return kExitSuccess;
}

int cmd_fourier(const Options& opt, std::ostream& out) {
  const UnitFunction f = parse_unit_function(opt.function);
  const CyclotomicElement s = fourier_sum(f, opt.index).value;
  const CyclotomicElement norm = norm_squared(s);
  const auto norm_int = as_integer(norm);
  const bool unit = norm_int && *norm_int == f.prime().value();
  if (opt.output == "json") {
    ordered_json j;
    j["function"] = f.to_string();
    j["xi"] = mod(opt.index, f.prime().value());
    j["fourier_sum"] = element_json(s);
    j["norm_squared"] = element_json(norm);
    j["unit_magnitude"] = unit;
    out << j.dump() << "\n";
  } else {
    out << "xi=" << mod(opt.index, f.prime().value()) << "\n";
    print_element(out, "fourier_sum", s);
    print_element(out, "norm_squared", norm);
    out << "unit_magnitude=" << (unit ? "true" : "false") << "\n";
  }
  return kExitSuccess;
}

int cmd_autocorr(const Options& opt, std::ostream& out) {
  const UnitFunction f = parse_unit_function(opt.function);
  const CyclotomicElement a = autocorrelation(f, opt.index);
  if (opt.output == "json") {
    ordered_json j;
    j["function"] = f.to_string();
    j["h"] = mod(opt.index, f.prime().value());
    j["autocorrelation"] = element_json(a);
    out << j.dump() << "\n";
  } else {
    out << "h=" << mod(opt.index, f.prime().value()) << "\n";
    print_element(out, "autocorrelation", a);
  }
  return kExitSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  try {
    opt.budget = default_budget();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Exact Gauss sums, Fourier coefficients and character tests over F_p", "gauss"};
  app.require_subcommand(1);

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", opt.output, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", opt.budget, "maximum number of functions to enumerate")
        ->check(CLI::PositiveNumber);
  };
  auto add_function = [&](CLI::App* sub) {
    sub->add_option("--fn", opt.function, "function as \"p=<p> n=<n> exps=<k1>,...\"")
        ->required();
  };

  CLI::App* verify = app.add_subcommand("verify", "exhaustively verify a statement");
  verify->add_option("--statement", opt.statement, "statement id, or 'all' for the default grid")
      ->required();
  verify->add_option("--p", opt.p, "odd prime");
  verify->add_option("--n", opt.n, "root-of-unity order (default 2)");
  verify->add_flag("--witnesses", opt.witnesses, "list witnesses");
  add_budget(verify);
  add_output(verify);

  CLI::App* search = app.add_subcommand("search", "search p | n for non-characters with |tau| = sqrt(p)");
  search->add_option("--p", opt.p, "odd prime")->required();
  search->add_option("--n", opt.n, "root-of-unity order, divisible by p")->required();
  search->add_flag("--witnesses", opt.witnesses, "list hits");
  add_budget(search);
  add_output(search);

  CLI::App* classify = app.add_subcommand("classify", "run the spectral test and the oracle");
  add_function(classify);
  add_output(classify);

  CLI::App* gauss = app.add_subcommand("gauss-sum", "exact Gauss sum");
  add_function(gauss);
  add_output(gauss);

  CLI::App* fourier = app.add_subcommand("fourier", "exact unnormalized Fourier coefficient");
  add_function(fourier);
  fourier->add_option("--xi", opt.index, "frequency")->required();
  add_output(fourier);

  CLI::App* autocorr = app.add_subcommand("autocorr", "exact autocorrelation");
  add_function(autocorr);
  autocorr->set_help_flag("--help", "print this help message and exit");
  autocorr->add_option("--h", opt.index, "shift")->required();
  add_output(autocorr);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(opt, out);
    if (*search) return cmd_search(opt, out);
    if (*classify) return cmd_classify(opt, out, err);
    if (*gauss) return cmd_gauss_sum(opt, out);
    if (*fourier) return cmd_fourier(opt, out);
    if (*autocorr) return cmd_autocorr(opt, out);
  } catch (const HypothesisViolation& e) {
    err << "error: hypothesis violated: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gauss::cli
