// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "advbound/adversary/adversary_json.h"
#include "advbound/adversary/compose.h"
#include "advbound/cli/cli.h"
#include "advbound/solver/optimize.h"
#include "advbound/solver/readonce.h"
#include "advbound/solver/verify.h"
#include "generators.h"
#include "oracles.h"

namespace {

using namespace advbound;
using adversary::AdversaryMatrix;
using adversary::CostVector;
using boolfn::CompositionSpec;
using boolfn::make_family;

std::string g_detail;

void note(const std::string& s) {
  if (g_detail.empty()) g_detail = s;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bool gadget_exactness() {
  const double r2 = std::sqrt(2.0);
  const struct {
    double b1, b2, expected;
  } cases[] = {{1, 1, r2}, {3, 4, 5.0}, {1, r2, std::sqrt(3.0)}};
  bool ok = true;
  for (const auto& c : cases) {
    char arg[64];
    std::snprintf(arg, sizeof arg, "%.17g,%.17g", c.b1, c.b2);
    std::ostringstream out, err;
    if (cli::run({"gadget", "--gate", "and", "--beta", arg}, out, err) != cli::kExitOk) {
      note(std::string("gadget ") + arg + " failed: " + err.str());
      return false;
    }
    const auto g = nlohmann::json::parse(out.str())["results"]["gadget"];
    const double value = g["value"].get<double>();
    const double lower = g["lower"].get<double>();
    const double upper = g["upper"].get<double>();
    const double m1 = g["masked_norms"][0].get<double>();
    const double m2 = g["masked_norms"][1].get<double>();
    const bool here = std::abs(value - c.expected) <= 1e-12 && std::abs(lower - c.expected) <= 1e-12 &&
                      std::abs(upper - c.expected) <= 1e-12 && std::abs(m1 - c.b1) <= 1e-10 &&
                      std::abs(m2 - c.b2) <= 1e-10;
    if (!here) note(std::string("beta ") + arg + ": value " + num(value) + " masked " + num(m1) + "," + num(m2));
    ok = ok && here;
  }
  note("3 beta pairs");
  return ok;
}

struct RandomCase {
  CompositionSpec spec;
  AdversaryMatrix gamma_f;
  std::vector<AdversaryMatrix> gammas_g;
};

std::vector<RandomCase> composition_cases() {
  testing::Rng rng(424242);
  std::vector<RandomCase> cases;
  while (cases.size() < 200) {
    const int k = 1 + rng.below(3);
    std::vector<boolfn::BooleanFunction> inner;
    std::vector<AdversaryMatrix> gammas;
    for (int i = 0; i < k; ++i) {
      inner.push_back(testing::random_function(rng, 1 + rng.below(2), 0.3));
      gammas.push_back(testing::random_gamma(rng, inner.back()));
    }
    const auto outer = testing::random_function(rng, k, 0.3);
    CompositionSpec spec(outer, inner);
    if (spec.total_arity() > 10) continue;
    cases.push_back({spec, testing::random_gamma(rng, outer), gammas});
  }
  return cases;
}

bool product_law(const std::vector<RandomCase>& cases) {
  double worst_norm = 0.0;
  double worst_residual = 0.0;
  for (const auto& c : cases) {
    const auto h = adversary::compose_gamma(c.gamma_f, c.gammas_g, c.spec);
    if (h.matrix.dim() == 0) continue;
    const auto dense = oracle::dense(h.matrix);
    double product = oracle::norm(c.gamma_f.matrix);
    for (const auto& g : c.gammas_g) product *= oracle::norm(g.matrix);
    worst_norm = std::max(worst_norm, std::abs(oracle::norm(dense) - product) / product);

    std::vector<adversary::EigvecParts> parts;
    for (const auto& g : c.gammas_g) {
      parts.push_back(adversary::split_eigenvector(g.function, specmat::principal_eigenvector(g.matrix)));
    }
    const auto v = adversary::compose_eigenvector(specmat::principal_eigenvector(c.gamma_f.matrix), parts, c.spec);
    Eigen::VectorXd ev(static_cast<long>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) ev(static_cast<long>(i)) = v[i];
    const double residual = (dense * ev - product * ev).norm() / (product * ev.norm());
    worst_residual = std::max(worst_residual, residual);
  }
  note("worst relative norm error " + num(worst_norm) + ", worst eigenvector residual " + num(worst_residual));
  return worst_norm <= 1e-8 && worst_residual <= 1e-8;
}

bool masked_factorization(const std::vector<RandomCase>& cases) {
  int checks = 0;
  for (const auto& c : cases) {
    for (int bit = 1; bit <= c.spec.total_arity(); ++bit) {
      const auto r = adversary::masked_compose_check(c.gamma_f, c.gammas_g, c.spec, bit);
      ++checks;
      if (!r.entrywise_ok || !r.ratio_ok || !r.norm_ok) {
        note("bit " + std::to_string(bit) + " of a " + std::to_string(c.spec.total_arity()) +
             "-bit composition: ratio " + num(r.ratio_composed) + " vs " + num(r.ratio_factored));
        return false;
      }
    }
  }
  note(std::to_string(checks) + " bit checks");
  return true;
}

bool weak_duality() {
  testing::Rng rng(515151);
  double worst = -std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + rng.below(3);
    const auto f = testing::random_function(rng, n, 0.3);
    const auto g = testing::random_gamma(rng, f);
    const auto w = testing::random_witness(rng, f);
    const auto alpha = testing::random_costs(rng, n);
    const double adv = adversary::adv_value(g, alpha);
    const double mm = adversary::mm_value(w, alpha);
    if (adv > mm + 1e-9) {
      note("trial " + std::to_string(trial) + ": adv " + num(adv) + " > mm " + num(mm));
      return false;
    }
    if (std::isfinite(mm)) worst = std::max(worst, adv - mm);
  }
  note("largest adv - mm " + num(worst));
  return true;
}

bool readonce_sqrt_n() {
  testing::Rng rng(616161);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + rng.below(10);
    const auto ast = testing::random_read_once(rng, n);
    const double v = solver::readonce_bound(ast, CostVector::ones(n)).value;
    worst = std::max(worst, std::abs(v - std::sqrt(static_cast<double>(n))));
  }
  note("worst error " + num(worst));
  return worst <= 1e-12;
}

bool gap_closure() {
  std::ifstream index_file(std::string(ADVBOUND_FIXTURES) + "/index.json");
  const auto index = nlohmann::json::parse(index_file);
  bool ok = true;
  std::string summary;
  for (const auto& [name, entry] : index.items()) {
    std::ifstream gf(std::string(ADVBOUND_FIXTURES) + "/" + entry["gamma"].get<std::string>());
    const auto f = adversary::adversary_from_json(nlohmann::json::parse(gf)).function;
    const CostVector alpha(entry["alpha"].get<std::vector<double>>());
    const double expected = entry["value"].get<double>();
    const auto cert = solver::certify(f, alpha, solver::SolverOptions{});
    const bool here = cert.gap <= 1e-2 && cert.lower <= expected + 1e-9 && expected <= cert.upper + 1e-9;
    summary += (summary.empty() ? "" : ", ") + name + " gap " + num(cert.gap);
    ok = ok && here;
  }
  note(summary);
  return ok;
}

bool composition_end_to_end() {
  const solver::SolverOptions opts;
  const struct {
    CompositionSpec spec;
    double expected;
  } cases[] = {
      {CompositionSpec(make_family("and", 2), {make_family("or", 2), make_family("or", 2)}), 2.0},
      {CompositionSpec(make_family("and", 2), {make_family("and", 2), make_family("id", 1)}), std::sqrt(3.0)},
  };
  bool ok = true;
  std::string summary;
  for (const auto& c : cases) {
    const auto r = solver::verify_composition(c.spec, CostVector::ones(c.spec.total_arity()), opts);
    const bool near = std::abs(r.lhs.midpoint() - c.expected) <= r.tolerance &&
                      std::abs(r.rhs.midpoint() - c.expected) <= r.tolerance;
    summary += (summary.empty() ? "" : ", ") + num(r.lhs.midpoint()) + " vs " + num(r.rhs.midpoint());
    ok = ok && r.pass && near;
  }
  note(summary);
  return ok;
}

bool iteration_depth_two() {
  const auto r = solver::verify_iteration(make_family("nand", 2), 2, solver::SolverOptions{});
  note("ADV(f^2) in [" + num(r.iterate.lower) + ", " + num(r.iterate.upper) + "], predicted " + num(r.predicted));
  return r.pass && std::abs(r.predicted - 2.0) <= 1e-2 + r.tolerance;
}

bool scaling_and_monotonicity() {
  testing::Rng rng(717171);
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + rng.below(3);
    const auto f = testing::random_function(rng, n, 0.3);
    const auto g = testing::random_gamma(rng, f);
    const auto alpha = testing::random_costs(rng, n);
    const double a = rng.uniform(0.01, 100.0);
    const double ratio = adversary::adv_value(g, alpha.scaled(a)) / adversary::adv_value(g, alpha);
    worst_ratio = std::max(worst_ratio, std::abs(ratio - a) / a);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + rng.below(3);
    const auto f = testing::random_function(rng, n, 0.3);
    const auto g = testing::random_gamma(rng, f);
    const auto w = testing::random_witness(rng, f);
    const auto alpha = testing::random_costs(rng, n);
    std::vector<double> bigger(alpha.values().begin(), alpha.values().end());
    for (auto& c : bigger) c *= rng.coin() ? rng.uniform(1.0, 3.0) : 1.0;
    const CostVector beta(bigger);
    if (adversary::adv_value(g, alpha) > adversary::adv_value(g, beta) * (1 + 1e-12) ||
        adversary::mm_value(w, alpha) > adversary::mm_value(w, beta) * (1 + 1e-12)) {
      note("monotonicity fails on trial " + std::to_string(trial));
      return false;
    }
  }
  note("worst relative scaling error " + num(worst_ratio));
  return worst_ratio <= 1e-12;
}

}  // namespace

int main() {
  const auto cases = composition_cases();
  const std::pair<const char*, std::function<bool()>> criteria[] = {
      {"AC1 gadget exactness", gadget_exactness},
      {"AC2 product law", [&] { return product_law(cases); }},
      {"AC3 masked factorization", [&] { return masked_factorization(cases); }},
      {"AC4 weak duality", weak_duality},
      {"AC5 read-once sqrt(n)", readonce_sqrt_n},
      {"AC6 duality gap closure", gap_closure},
      {"AC7 composition end to end", composition_end_to_end},
      {"AC8 iteration at depth 2", iteration_depth_two},
      {"AC9 scaling and monotonicity", scaling_and_monotonicity},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    g_detail.clear();
    const auto started = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      note(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::printf("%s %s (%.1fs): %s\n", ok ? "PASS" : "FAIL", name, secs, g_detail.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
