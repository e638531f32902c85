#include "advbound/cli/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "advbound/adversary/adversary_json.h"
#include "advbound/adversary/compose.h"
#include "advbound/boolfn/composition.h"
#include "advbound/boolfn/formula.h"
#include "advbound/boolfn/truth_table_json.h"
#include "advbound/cli/report.h"
#include "advbound/solver/solver_json.h"

namespace advbound::cli {

namespace {

using adversary::CostVector;
using adversary::json_real;
using boolfn::BooleanFunction;

constexpr double kWeakDualitySlack = 1e-9;
constexpr double kGadgetTolerance = 1e-12;
constexpr double kReadOnceTolerance = 1e-9;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json read_json_file(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<double> parse_reals(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const auto* first = text.data() + start;
    const auto* last = text.data() + end;
    while (first < last && *first == ' ') ++first;
    while (last > first && last[-1] == ' ') --last;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
      throw std::invalid_argument(flag + ": '" + std::string(text.data() + start, text.data() + end) +
                                  "' is not a number");
    }
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

CostVector cost_vector(const std::string& text, int arity) {
  if (text.empty()) return CostVector::ones(static_cast<std::size_t>(arity));
  auto values = parse_reals(text, "--alpha");
  if (static_cast<int>(values.size()) != arity) {
    throw std::invalid_argument("--alpha has " + std::to_string(values.size()) + " entries, expected " +
                                std::to_string(arity));
  }
  try {
    return CostVector(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("--alpha: ") + e.what());
  }
}

struct Outcome {
  nlohmann::json results = nlohmann::json::object();
  bool pass = true;
  std::string summary;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

void add_source(CLI::App* sub, FunctionSource& src) {
  sub->add_option("--family", src.family, "Function family: and, or, parity (xor), nand, id");
  sub->add_option("--n", src.n, "Arity for --family (or --formula)")->check(CLI::PositiveNumber);
  sub->add_option("--formula", src.formula, "Formula over x1..xn with ~, &, |");
  sub->add_option("--table", src.table, "Truth-table JSON file");
}

void add_solver(CLI::App* sub, solver::SolverOptions& opts) {
  sub->add_option("--seed", opts.seed, "Base RNG seed");
  sub->add_option("--restarts", opts.restarts, "Restarts per optimizer")->check(CLI::PositiveNumber);
  sub->add_option("--iterations", opts.max_iterations, "Iterations per restart")->check(CLI::PositiveNumber);
  sub->add_option("--gap", opts.target_gap, "Target duality gap")->check(CLI::PositiveNumber);
  sub->add_option("--jobs", opts.jobs, "Threads for restarts")->check(CLI::PositiveNumber);
}

nlohmann::json function_summary(const BooleanFunction& f) {
  return {{"arity", f.arity()},
          {"size", f.size()},
          {"total", f.is_total()},
          {"constant", f.is_constant()},
          {"table", boolfn::to_json(f)}};
}

Outcome cmd_parse(const FunctionSource& src) {
  const auto f = load_function(src);
  Outcome o;
  o.results["function"] = function_summary(f);
  if (!src.formula.empty()) {
    const auto ast = boolfn::parse_formula(src.formula);
    o.results["formula"] = {{"text", boolfn::to_string(ast)},
                            {"read_once", ast.read_once},
                            {"leaves", ast.leaf_count},
                            {"max_variable", ast.max_variable}};
  }
  o.summary = "arity " + std::to_string(f.arity()) + ", |S| = " + std::to_string(f.size());
  return o;
}

Outcome cmd_bound(const FunctionSource& src, const std::string& alpha_text, const solver::SolverOptions& opts) {
  const auto f = load_function(src);
  const auto cert = solver::certify(f, cost_vector(alpha_text, f.arity()), opts);
  Outcome o;
  o.results["certificate"] = solver::to_json(cert);
  o.pass = cert.lower <= cert.upper + kWeakDualitySlack;
  o.summary = "ADV in [" + fmt(cert.lower) + ", " + fmt(cert.upper) + "], gap " + fmt(cert.gap) +
              (cert.tight ? " (tight)" : " (not tight)");
  return o;
}

Outcome cmd_gadget(const std::string& gate, const std::string& beta_text) {
  const auto beta = parse_reals(beta_text, "--beta");
  if (beta.size() != 2) throw std::invalid_argument("--beta needs exactly two values");
  const auto g = solver::gadget_cost_adv(solver::parse_gate(gate), beta[0], beta[1]);
  Outcome o;
  o.results["gadget"] = solver::to_json(g);
  o.pass = std::abs(g.lower - g.value) <= kGadgetTolerance * g.value &&
           std::abs(g.upper - g.value) <= kGadgetTolerance * g.value;
  o.summary = solver::gate_name(g.gate) + " gadget value " + fmt(g.value);
  return o;
}

Outcome cmd_readonce(const std::string& text, const std::string& alpha_text, bool with_certificate,
                     const solver::SolverOptions& opts) {
  const auto ast = boolfn::parse_formula(text);
  if (!ast.read_once) throw std::invalid_argument("formula is not read-once: some variable appears more than once");
  const auto alpha = cost_vector(alpha_text, ast.max_variable);
  const auto bound = solver::readonce_bound(ast, alpha);
  Outcome o;
  o.results["formula"] = boolfn::to_string(ast);
  o.results["n"] = ast.max_variable;
  o.results["alpha"] = adversary::to_json(alpha);
  o.results["value"] = json_real(bound.value);
  o.results["trace"] = solver::to_json(bound)["trace"];
  if (with_certificate) {
    const auto cert = solver::readonce_certificate(ast, alpha, opts.eigen, opts.eigensolve_cap);
    o.results["certificate"] = solver::to_json(cert);
    const double tol = kReadOnceTolerance * std::max(1.0, bound.value);
    o.pass = std::abs(cert.lower - bound.value) <= tol && std::abs(cert.upper - bound.value) <= tol;
  }
  o.summary = "read-once bound " + fmt(bound.value);
  return o;
}

boolfn::CompositionSpec composition_from_refs(const std::string& outer, const std::vector<std::string>& inner) {
  if (inner.empty()) throw std::invalid_argument("--inner: at least one inner function is required");
  std::vector<BooleanFunction> gs;
  for (const auto& ref : inner) gs.push_back(load_function_ref(ref));
  return boolfn::CompositionSpec(load_function_ref(outer), std::move(gs));
}

Outcome cmd_compose(const std::string& outer, const std::vector<std::string>& inner, const std::string& alpha_text,
                    bool with_certificates, const solver::SolverOptions& opts) {
  const auto spec = composition_from_refs(outer, inner);
  const auto h = boolfn::compose_functions(spec, opts.eigensolve_cap);
  Outcome o;
  o.results["composed"] = function_summary(h);
  o.results["offsets"] = spec.offsets();
  o.summary = "composed function on " + std::to_string(h.arity()) + " bits, |S| = " + std::to_string(h.size());
  if (!with_certificates) return o;

  const auto alpha = cost_vector(alpha_text, h.arity());
  std::vector<adversary::AdversaryMatrix> gammas;
  std::vector<adversary::MinimaxWitness> witnesses;
  std::vector<double> beta;
  nlohmann::json inner_json = nlohmann::json::array();
  for (std::size_t i = 0; i < spec.block_count(); ++i) {
    const auto c = solver::certify(spec.inner(i),
                                   alpha.slice(static_cast<std::size_t>(spec.offsets()[i]),
                                               static_cast<std::size_t>(spec.inner(i).arity())),
                                   opts);
    gammas.push_back(c.lower_gamma);
    witnesses.push_back(c.upper_witness);
    beta.push_back(c.midpoint());
    inner_json.push_back(solver::to_json(c));
  }
  const auto outer_cert = solver::certify(spec.outer(), CostVector(beta), opts);
  const auto gamma_h = adversary::compose_gamma(outer_cert.lower_gamma, gammas, spec, opts.eigen, opts.eigensolve_cap);
  const auto witness_h = adversary::compose_minimax(outer_cert.upper_witness, witnesses, spec, opts.eigensolve_cap);
  const double lower = adversary::adv_value(gamma_h, alpha, opts.eigen);
  const double upper = adversary::mm_value(witness_h, alpha);

  nlohmann::json checks = nlohmann::json::array();
  bool all_ok = true;
  for (int bit = 1; bit <= h.arity(); ++bit) {
    const auto r = adversary::masked_compose_check(outer_cert.lower_gamma, gammas, spec, bit, opts.eigen,
                                                   opts.eigensolve_cap);
    all_ok = all_ok && r.pass;
    checks.push_back({{"bit", r.global_bit},
                      {"block", r.block},
                      {"inner_bit", r.inner_bit},
                      {"entrywise_max_abs_diff", json_real(r.entrywise_max_abs_diff)},
                      {"masked_norm", json_real(r.masked_norm)},
                      {"masked_norm_product", json_real(r.masked_norm_product)},
                      {"ratio_composed", json_real(r.ratio_composed)},
                      {"ratio_factored", json_real(r.ratio_factored)},
                      {"pass", r.pass}});
  }
  o.results["alpha"] = adversary::to_json(alpha);
  o.results["inner"] = std::move(inner_json);
  o.results["beta"] = beta;
  o.results["outer"] = solver::to_json(outer_cert);
  o.results["gamma"] = adversary::to_json(gamma_h);
  o.results["witness"] = adversary::to_json(witness_h);
  o.results["lower"] = json_real(lower);
  o.results["upper"] = json_real(upper);
  o.results["masked_checks"] = std::move(checks);
  o.pass = all_ok && lower <= upper + kWeakDualitySlack;
  o.summary += "; composed bracket [" + fmt(lower) + ", " + fmt(upper) + "]";
  return o;
}

Outcome cmd_verify_composition(const std::string& outer, const std::vector<std::string>& inner,
                               const std::string& alpha_text, const solver::SolverOptions& opts) {
  const auto spec = composition_from_refs(outer, inner);
  const auto report = solver::verify_composition(spec, cost_vector(alpha_text, spec.total_arity()), opts);
  Outcome o;
  o.results["report"] = solver::to_json(report);
  o.pass = report.pass;
  o.summary = "ADV(h) midpoint " + fmt(report.lhs.midpoint()) + " vs ADV_beta(f) midpoint " +
              fmt(report.rhs.midpoint()) + (report.pass ? ": pass" : ": FAIL");
  return o;
}

Outcome cmd_verify_iteration(const FunctionSource& src, int depth, const solver::SolverOptions& opts) {
  const auto f = load_function(src);
  const auto report = solver::verify_iteration(f, depth, opts);
  Outcome o;
  o.results["report"] = solver::to_json(report);
  o.pass = report.pass;
  o.summary = "ADV(f)^" + std::to_string(depth) + " = " + fmt(report.predicted) + ", ADV(f^d) in [" +
              fmt(report.iterate.lower) + ", " + fmt(report.iterate.upper) + "]" + (report.pass ? ": pass" : ": FAIL");
  return o;
}

Outcome cmd_check_gamma(const std::string& gamma_path, const std::string& witness_path,
                        const std::string& alpha_text, const solver::SolverOptions& opts) {
  const auto gamma = adversary::adversary_from_json(read_json_file(gamma_path));
  const auto report = adversary::validate(gamma);
  Outcome o;
  o.results["validation"] = adversary::to_json(report);
  bool usable = true;
  for (const auto& v : report.violations) usable = usable && v.kind == adversary::Violation::Kind::kAllZero;
  o.pass = usable;
  if (!usable) {
    o.summary = "invalid adversary matrix (" + std::to_string(report.violations.size()) + " violations)";
    return o;
  }
  const auto alpha = cost_vector(alpha_text, gamma.function.arity());
  const auto eval = adversary::adv_terms(gamma, alpha, opts.eigen);
  nlohmann::json masked = nlohmann::json::array();
  nlohmann::json terms = nlohmann::json::array();
  for (double v : eval.masked_norms) masked.push_back(json_real(v));
  for (double v : eval.terms) terms.push_back(json_real(v));
  o.results["alpha"] = adversary::to_json(alpha);
  o.results["adv"] = {{"gamma_norm", json_real(eval.gamma_norm)},
                      {"masked_norms", std::move(masked)},
                      {"terms", std::move(terms)},
                      {"value", json_real(eval.value)}};
  o.summary = "adv_value " + fmt(eval.value);
  if (!witness_path.empty()) {
    const auto witness = adversary::witness_from_json(read_json_file(witness_path), gamma.function);
    const auto mm = adversary::mm_terms(witness, alpha);
    const bool weak_duality = eval.value <= mm.value + kWeakDualitySlack;
    o.results["mm"] = {{"value", json_real(mm.value)}, {"worst_x", mm.worst_x}, {"worst_y", mm.worst_y}};
    o.results["weak_duality"] = weak_duality;
    o.pass = weak_duality;
    o.summary += ", mm_value " + fmt(mm.value);
  }
  return o;
}

}  // namespace

BooleanFunction load_function(const FunctionSource& source) {
  const int given = !source.family.empty() + !source.formula.empty() + !source.table.empty();
  if (given == 0) throw std::invalid_argument("no function given: use --family NAME --n K, --formula TEXT or --table PATH");
  if (given > 1) throw std::invalid_argument("conflicting function sources: give only one of --family, --formula, --table");
  if (!source.family.empty()) {
    if (source.n <= 0) throw std::invalid_argument("--family needs --n K");
    return boolfn::make_family(source.family, source.n);
  }
  if (!source.formula.empty()) {
    const auto ast = boolfn::parse_formula(source.formula);
    return boolfn::formula_to_function(ast, source.n > 0 ? source.n : ast.max_variable);
  }
  if (source.n > 0) throw std::invalid_argument("--n cannot be combined with --table");
  return boolfn::function_from_json(read_json_file(source.table));
}

BooleanFunction load_function_ref(const std::string& ref) {
  const auto colon = ref.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("function reference '" + ref + "' must look like and:2, formula:TEXT or table:PATH");
  }
  const auto kind = ref.substr(0, colon);
  const auto rest = ref.substr(colon + 1);
  if (kind == "formula") return load_function({"", 0, rest, ""});
  if (kind == "table") return load_function({"", 0, "", rest});
  int n = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || n <= 0) {
    throw std::invalid_argument("function reference '" + ref + "' needs a positive arity after ':'");
  }
  return boolfn::make_family(kind, n);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  CLI::App app{"Cost-weighted adversary bounds for small Boolean functions", "advbound"};
  app.require_subcommand(1, 1);

  FunctionSource src;
  solver::SolverOptions opts;
  std::string alpha_text;
  std::string gate;
  std::string beta_text;
  std::string formula_text;
  bool with_certificate = false;
  std::string outer_ref;
  std::vector<std::string> inner_refs;
  int depth = 2;
  std::string gamma_path;
  std::string witness_path;

  auto* parse = app.add_subcommand("parse", "Load a function and print its truth table");
  add_source(parse, src);

  auto* bound = app.add_subcommand("bound", "Certify ADV_alpha(f) with a lower and an upper certificate");
  add_source(bound, src);
  bound->add_option("--alpha", alpha_text, "Comma-separated query costs (default all ones)");
  add_solver(bound, opts);

  auto* gadget = app.add_subcommand("gadget", "Closed-form AND/OR gadget with costs beta");
  gadget->add_option("--gate", gate, "and or or")->required();
  gadget->add_option("--beta", beta_text, "Two comma-separated costs")->required();

  auto* readonce = app.add_subcommand("readonce", "Bound for a read-once formula by recursion over its gates");
  readonce->add_option("formula", formula_text, "Formula over x1..xn")->required();
  readonce->add_option("--alpha", alpha_text, "Comma-separated query costs (default all ones)");
  readonce->add_flag("--certificate", with_certificate, "Also build the explicit matrix and witness");

  auto* compose = app.add_subcommand("compose", "Build h = f o (g_1, ..., g_k)");
  compose->add_option("--outer", outer_ref, "Outer function reference, e.g. and:2")->required();
  compose->add_option("--inner", inner_refs, "Inner function references, one per outer bit")->required();
  compose->add_option("--alpha", alpha_text, "Comma-separated query costs for h (default all ones)");
  compose->add_flag("--certify", with_certificate, "Compose certified matrices and witnesses of the components");
  add_solver(compose, opts);

  auto* verify_comp = app.add_subcommand("verify-composition", "Compare ADV_alpha(h) with ADV_beta(f)");
  verify_comp->add_option("--outer", outer_ref, "Outer function reference, e.g. and:2")->required();
  verify_comp->add_option("--inner", inner_refs, "Inner function references, one per outer bit")->required();
  verify_comp->add_option("--alpha", alpha_text, "Comma-separated query costs for h (default all ones)");
  add_solver(verify_comp, opts);

  auto* verify_iter = app.add_subcommand("verify-iteration", "Compare ADV(f^d) with ADV(f)^d");
  add_source(verify_iter, src);
  verify_iter->add_option("--depth", depth, "Iteration depth d")->check(CLI::PositiveNumber);
  add_solver(verify_iter, opts);

  auto* check_gamma = app.add_subcommand("check-gamma", "Validate an adversary matrix and evaluate it");
  check_gamma->add_option("--gamma", gamma_path, "Adversary matrix JSON file")->required();
  check_gamma->add_option("--witness", witness_path, "Optional minimax witness JSON file");
  check_gamma->add_option("--alpha", alpha_text, "Comma-separated query costs (default all ones)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Outcome outcome;
  std::vector<std::string> input_files;
  try {
    if (!src.table.empty()) input_files.push_back(src.table);
    std::vector<std::string> refs = inner_refs;
    refs.insert(refs.begin(), outer_ref);
    for (const auto& ref : refs) {
      if (ref.rfind("table:", 0) == 0) input_files.push_back(ref.substr(6));
    }
    if (!gamma_path.empty()) input_files.push_back(gamma_path);
    if (!witness_path.empty()) input_files.push_back(witness_path);

    opts.check();
    if (parse->parsed()) {
      outcome = cmd_parse(src);
    } else if (bound->parsed()) {
      outcome = cmd_bound(src, alpha_text, opts);
    } else if (gadget->parsed()) {
      outcome = cmd_gadget(gate, beta_text);
    } else if (readonce->parsed()) {
      outcome = cmd_readonce(formula_text, alpha_text, with_certificate, opts);
    } else if (compose->parsed()) {
      outcome = cmd_compose(outer_ref, inner_refs, alpha_text, with_certificate, opts);
    } else if (verify_comp->parsed()) {
      outcome = cmd_verify_composition(outer_ref, inner_refs, alpha_text, opts);
    } else if (verify_iter->parsed()) {
      outcome = cmd_verify_iteration(src, depth, opts);
    } else {
      outcome = cmd_check_gamma(gamma_path, witness_path, alpha_text, opts);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }

  Report report;
  report.command = args;
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const auto& a : args) hash = fnv1a64(std::string_view(a.c_str(), a.size() + 1), hash);
  for (const auto& path : input_files) {
    const auto bytes = read_file(path);
    hash = fnv1a64(std::string_view(bytes.c_str(), bytes.size() + 1), hash);
  }
  report.inputs_digest = digest_string(hash);
  report.seed = opts.seed;
  report.results = std::move(outcome.results);
  report.pass = outcome.pass;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  out << to_json(report).dump(2) << "\n";
  err << app.get_subcommands().front()->get_name() << ": " << outcome.summary << (outcome.pass ? "" : " [FAILED]")
      << "\n";
  return outcome.pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace advbound::cli
