#include "qfl_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qfl/families.hpp"
#include "qfl/fourier.hpp"
#include "qfl/mpoly.hpp"
#include "qfl/suites.hpp"

namespace qfl::cli {

namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenOptions {
  std::string family;
  int n = 0;
  std::string format = "json";
  std::optional<std::string> q;
  std::string a = "1";
  std::string b = "1";
  std::optional<std::string> output;
};

struct VerifyOptions {
  std::string suite = "all";
  int n_max = 12;
  int nodes = 96;
  double tol = 1e-8;
  std::uint64_t seed = 20111001;
  std::optional<std::string> report;
  std::optional<std::string> perturb;
};

struct EvalOptions {
  std::string family;
  int n = 0;
  std::string x = "0";
  std::string s = "1";
  std::optional<std::string> q;
  std::string a = "1";
  std::string b = "1";
};

struct FourierOptions {
  std::string family;
  int n = 0;
  double a = 1.0;
  double s = 1.0;
  double q = 0.5;
  double y = 0.0;
  int nodes = 96;
  double tol = 1e-8;
  std::optional<std::string> report;
  std::optional<std::string> perturb;
};

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw ConfigError("--" + name + ": expected a rational \"p/q\", got '" + text + "'");
  }
}

std::optional<Rational> rational_arg(const std::string& name, const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return rational_arg(name, *text);
}

FamilyKind family_arg(const std::string& text) {
  try {
    return parse_family(text);
  } catch (const std::exception&) {
    throw ConfigError("--family: unknown family '" + text + "'");
  }
}

bool needs_base(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::RFib:
    case FamilyKind::RLucas:
    case FamilyKind::SU:
    case FamilyKind::ST:
    case FamilyKind::LittleQJacobi:
      return true;
    default:
      return false;
  }
}

bool is_q_kind(FamilyKind kind) {
  return kind == FamilyKind::QFib || kind == FamilyKind::QLucas || kind == FamilyKind::QFibInv ||
         kind == FamilyKind::QLucasInv;
}

// "N,K" or "N,K,DELTA" with DELTA rational.
CoeffPerturbation perturbation_arg(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) parts.push_back(part);
  auto as_int = [&](const std::string& s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
      throw ConfigError("--perturb-coeff: expected N,K[,DELTA], got '" + text + "'");
    }
    return v;
  };
  if (parts.size() < 2 || parts.size() > 3) throw ConfigError("--perturb-coeff: expected N,K[,DELTA], got '" + text + "'");
  CoeffPerturbation p{as_int(parts[0]), as_int(parts[1]), Rational(1)};
  if (parts.size() == 3) p.delta = rational_arg("perturb-coeff", parts[2]);
  return p;
}

std::uint64_t effective_seed(std::uint64_t flag) {
  const char* env = std::getenv("QFL_SEED");
  if (env == nullptr || *env == '\0') return flag;
  std::uint64_t v = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw ConfigError("QFL_SEED: not an integer: '" + std::string(text) + "'");
  return v;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  f << body;
  if (!f) throw ConfigError("cannot write '" + path + "'");
}

FamilyParams params_for(FamilyKind kind, const std::optional<Rational>& q, const Rational& a, const Rational& b) {
  if (needs_base(kind) && !q) throw ConfigError("--q is required for family '" + std::string(family_name(kind)) + "'");
  return FamilyParams{q, a, b};
}

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  const FamilyKind kind = family_arg(o.family);
  if (o.n < 0) throw ConfigError("--n must be non-negative");
  if (o.format != "json" && o.format != "csv" && o.format != "latex") {
    throw ConfigError("--format: expected json, csv or latex, got '" + o.format + "'");
  }
  const FamilyParams params = params_for(kind, rational_arg("q", o.q), rational_arg("a", o.a), rational_arg("b", o.b));

  std::vector<MPoly> members;
  for (int n = 0; n <= o.n; ++n) members.push_back(family_member(kind, n, params));

  std::ostringstream body;
  if (o.format == "json") {
    nlohmann::json table = nlohmann::json::array();
    for (int n = 0; n <= o.n; ++n) {
      table.push_back({{"n", n}, {"poly", members[n].str()}, {"terms", to_json(members[n])}});
    }
    nlohmann::json doc{{"family", std::string(family_name(kind))}, {"members", table}};
    if (params.q) doc["q"] = params.q->str();
    if (kind == FamilyKind::LittleQJacobi) {
      doc["a"] = params.a.str();
      doc["b"] = params.b.str();
    }
    body << doc.dump(2) << '\n';
  } else if (o.format == "csv") {
    body << "n,ex,es,eq,coeff\n";
    for (int n = 0; n <= o.n; ++n) {
      for (const auto& [m, c] : members[n].terms()) {
        body << n << ',' << m.ex << ',' << m.es << ',' << m.eq << ',' << csv_field(c.str()) << '\n';
      }
    }
  } else {
    for (int n = 0; n <= o.n; ++n) {
      body << "P_{" << n << "} &= " << members[n].latex() << " \\\\\n";
    }
  }
  if (o.output) {
    write_file(*o.output, body.str());
  } else {
    out << body.str();
  }
  return kPass;
}

std::string identity_line(const IdentityReport& r) {
  std::ostringstream line;
  line << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(36) << r.identity_id << " (" << r.equation
       << ")  " << r.range;
  if (r.first_failure) {
    line << "  first failure: " << r.first_failure->parameters;
    if (!r.first_failure->lhs.empty() || !r.first_failure->rhs.empty()) {
      line << "  lhs=" << r.first_failure->lhs << "  rhs=" << r.first_failure->rhs;
    }
  }
  return line.str();
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (!is_suite_name(o.suite)) throw ConfigError("--suite: unknown suite '" + o.suite + "'");
  if (o.n_max < 0) throw ConfigError("--n-max must be non-negative");
  if (o.nodes < 1) throw ConfigError("--nodes must be positive");
  if (!(o.tol > 0)) throw ConfigError("--tol must be positive");

  SuiteOptions opts;
  opts.n_max = o.n_max;
  opts.nodes = o.nodes;
  opts.tol = o.tol;
  opts.seed = effective_seed(o.seed);
  if (o.perturb) opts.perturbation = perturbation_arg(*o.perturb);

  const SuiteResult result = run_suite(o.suite, opts);
  std::size_t failed = 0;
  for (const auto& r : result.identities) {
    out << identity_line(r) << '\n';
    if (!r.passed()) ++failed;
  }
  const bool ok = result.passed();
  out << (ok ? "ALL PASS" : "FAILED") << ": " << result.identities.size() - failed << '/' << result.identities.size()
      << " identities";
  if (!result.fourier.empty()) {
    const auto fourier_ok = std::count_if(result.fourier.begin(), result.fourier.end(), [](const auto& f) { return f.passed; });
    out << ", " << fourier_ok << '/' << result.fourier.size() << " fourier cases";
  }
  out << '\n';

  if (o.report) {
    nlohmann::json doc = to_json(result);
    nlohmann::json echo{{"command", "verify"}, {"suite", o.suite},  {"n_max", o.n_max},
                        {"nodes", o.nodes},    {"tol", o.tol},      {"seed", opts.seed}};
    echo["perturbation"] = opts.perturbation ? nlohmann::json{{"n", opts.perturbation->n},
                                                              {"k", opts.perturbation->k},
                                                              {"delta", opts.perturbation->delta.str()}}
                                             : nlohmann::json(nullptr);
    doc["config_echo"] = echo;
    doc["status"] = ok ? "pass" : "fail";
    write_file(*o.report, doc.dump(2) + "\n");
  }
  return ok ? kPass : kFailure;
}

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  const FamilyKind kind = family_arg(o.family);
  if (o.n < 0) throw ConfigError("--n must be non-negative");
  const auto q = rational_arg("q", o.q);
  if (is_q_kind(kind) && !q) throw ConfigError("--q is required for family '" + std::string(family_name(kind)) + "'");
  const FamilyParams params = params_for(kind, q, rational_arg("a", o.a), rational_arg("b", o.b));
  const MPoly p = family_member(kind, o.n, params);
  // Fixed-base families carry q inside their coefficients.
  const Rational point_q = is_q_kind(kind) ? *q : Rational(1);
  Rational value;
  try {
    value = p.eval(rational_arg("x", o.x), rational_arg("s", o.s), point_q);
  } catch (const ZeroBase& e) {
    throw ConfigError(std::string("domain error: ") + e.what());
  }
  out << value.str() << '\n';
  return kPass;
}

int cmd_fourier(const FourierOptions& o, std::ostream& out) {
  const FamilyKind kind = family_arg(o.family);
  if (kind != FamilyKind::QFib && kind != FamilyKind::QLucas) {
    throw ConfigError("--family: fourier supports qfib and qlucas only");
  }
  if (o.n < 0) throw ConfigError("--n must be non-negative");
  if (o.nodes < 1) throw ConfigError("--nodes must be positive");
  if (!(o.tol > 0)) throw ConfigError("--tol must be positive");
  FourierCase c;
  try {
    c = FourierCase::make(kind, o.n, o.a, o.s, o.q, o.y);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("--q: ") + e.what());
  }
  if (o.nodes < min_nodes(c)) {
    throw ConfigError("--nodes: at least " + std::to_string(min_nodes(c)) + " nodes needed for this case");
  }
  std::optional<CoeffPerturbation> perturb;
  if (o.perturb) perturb = perturbation_arg(*o.perturb);
  const FourierResult r = evaluate_fourier_case(c, QuadratureRule(o.nodes), o.tol, perturb ? &*perturb : nullptr);
  nlohmann::json doc = to_json(r);
  doc["equation"] = kind == FamilyKind::QFib ? "4.7" : "4.13";
  out << doc.dump(2) << '\n';
  if (o.report) write_file(*o.report, doc.dump(2) + "\n");
  return r.passed ? kPass : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-Fibonacci / q-Lucas polynomial toolkit", "qfl"};
  app.require_subcommand(1, 1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write the coefficient table of family members 0..n");
  gen_cmd->add_option("--family", gen.family, "Family name")->required();
  gen_cmd->add_option("--n", gen.n, "Largest index")->required();
  gen_cmd->add_option("--format", gen.format, "json, csv or latex")->capture_default_str();
  gen_cmd->add_option("--q", gen.q, "Fixed rational base (r/s/lqjacobi families)");
  gen_cmd->add_option("--a", gen.a, "Little q-Jacobi parameter a")->capture_default_str();
  gen_cmd->add_option("--b", gen.b, "Little q-Jacobi parameter b")->capture_default_str();
  gen_cmd->add_option("--output", gen.output, "Write to a file instead of stdout");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", verify.suite, "all, classical, qcore, families, hyper, gf, fourier, section5")
      ->capture_default_str();
  verify_cmd->add_option("--n-max", verify.n_max, "Largest index checked")->capture_default_str();
  verify_cmd->add_option("--nodes", verify.nodes, "Quadrature nodes")->capture_default_str();
  verify_cmd->add_option("--tol", verify.tol, "Relative quadrature tolerance")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Seed for randomized sweeps (QFL_SEED overrides)")->capture_default_str();
  verify_cmd->add_option("--report", verify.report, "JSON report path");
  verify_cmd->add_option("--perturb-coeff", verify.perturb, "Corrupt c_{N,K} by DELTA: N,K[,DELTA]");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one family member exactly");
  eval_cmd->add_option("--family", eval.family, "Family name")->required();
  eval_cmd->add_option("--n", eval.n, "Index")->required();
  eval_cmd->add_option("--x", eval.x, "Rational x")->capture_default_str();
  eval_cmd->add_option("--s", eval.s, "Rational s")->capture_default_str();
  eval_cmd->add_option("--q", eval.q, "Rational q");
  eval_cmd->add_option("--a", eval.a, "Little q-Jacobi parameter a")->capture_default_str();
  eval_cmd->add_option("--b", eval.b, "Little q-Jacobi parameter b")->capture_default_str();

  FourierOptions fourier;
  auto* fourier_cmd = app.add_subcommand("fourier", "Check the Fourier transform theorem for one case");
  fourier_cmd->add_option("--family", fourier.family, "qfib or qlucas")->required();
  fourier_cmd->add_option("--n", fourier.n, "Polynomial degree")->required();
  fourier_cmd->add_option("--a", fourier.a, "Scale a")->capture_default_str();
  fourier_cmd->add_option("--s", fourier.s, "Parameter s")->capture_default_str();
  fourier_cmd->add_option("--q", fourier.q, "Base q in (0,1)")->capture_default_str();
  fourier_cmd->add_option("--y", fourier.y, "Frequency y")->capture_default_str();
  fourier_cmd->add_option("--nodes", fourier.nodes, "Quadrature nodes")->capture_default_str();
  fourier_cmd->add_option("--tol", fourier.tol, "Relative tolerance")->capture_default_str();
  fourier_cmd->add_option("--report", fourier.report, "JSON report path");
  fourier_cmd->add_option("--perturb-coeff", fourier.perturb, "Corrupt c_{N,K} by DELTA: N,K[,DELTA]");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*eval_cmd) return cmd_eval(eval, out);
    return cmd_fourier(fourier, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace qfl::cli
