#include "advbound/solver/solver_json.h"

#include <stdexcept>

#include "advbound/adversary/adversary_json.h"
#include "advbound/boolfn/truth_table_json.h"

namespace advbound::solver {

namespace {

using adversary::json_real;
using adversary::real_from_json;

nlohmann::json stats_json(const SearchStats& s) {
  return {{"restarts", s.restarts}, {"iterations", s.iterations}, {"best_restart", s.best_restart}};
}

SearchStats stats_from_json(const nlohmann::json& doc) {
  return {doc.at("restarts").get<int>(), doc.at("iterations").get<int>(), doc.at("best_restart").get<int>()};
}

nlohmann::json reals(const std::vector<double>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (double v : values) out.push_back(json_real(v));
  return out;
}

}  // namespace

nlohmann::json to_json(const BoundCertificate& cert) {
  return {{"function", boolfn::to_json(cert.function)},
          {"alpha", adversary::to_json(cert.alpha)},
          {"lower", {{"value", json_real(cert.lower)}, {"gamma", adversary::to_json(cert.lower_gamma)}}},
          {"upper", {{"value", json_real(cert.upper)}, {"witness", adversary::to_json(cert.upper_witness)}}},
          {"gap", json_real(cert.gap)},
          {"midpoint", json_real(cert.midpoint())},
          {"tight", cert.tight},
          {"solver", {{"seed", cert.seed}, {"primal", stats_json(cert.primal)}, {"dual", stats_json(cert.dual)}}}};
}

BoundCertificate certificate_from_json(const nlohmann::json& doc) {
  try {
    BoundCertificate cert;
    cert.function = boolfn::function_from_json(doc.at("function"));
    cert.alpha = CostVector(doc.at("alpha").get<std::vector<double>>());
    cert.lower_gamma = adversary::adversary_from_json(doc.at("lower").at("gamma"));
    if (!(cert.lower_gamma.function == cert.function)) {
      throw std::invalid_argument("certificate matrix is over a different function");
    }
    const auto report = adversary::validate(cert.lower_gamma);
    for (const auto& v : report.violations) {
      if (v.kind != adversary::Violation::Kind::kAllZero) throw std::invalid_argument(v.message);
    }
    cert.lower = real_from_json(doc.at("lower").at("value"));
    cert.upper_witness = adversary::witness_from_json(doc.at("upper").at("witness"), cert.function);
    cert.upper = real_from_json(doc.at("upper").at("value"));
    cert.gap = real_from_json(doc.at("gap"));
    cert.tight = doc.at("tight").get<bool>();
    const auto& solver = doc.at("solver");
    cert.seed = solver.at("seed").get<std::uint64_t>();
    cert.primal = stats_from_json(solver.at("primal"));
    cert.dual = stats_from_json(solver.at("dual"));
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

nlohmann::json to_json(const GadgetResult& gadget) {
  return {{"gate", gate_name(gadget.gate)},
          {"beta", reals({gadget.beta1, gadget.beta2})},
          {"value", json_real(gadget.value)},
          {"lower", json_real(gadget.lower)},
          {"upper", json_real(gadget.upper)},
          {"masked_norms", reals({gadget.masked_norm1, gadget.masked_norm2})},
          {"gamma", adversary::to_json(gadget.gamma)},
          {"witness", adversary::to_json(gadget.witness)}};
}

nlohmann::json to_json(const ReadOnceBound& bound) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& step : bound.trace) {
    trace.push_back({{"node", step.node}, {"kind", step.kind}, {"inputs", reals(step.inputs)},
                     {"value", json_real(step.value)}});
  }
  return {{"value", json_real(bound.value)}, {"trace", std::move(trace)}};
}

nlohmann::json to_json(const ReadOnceCertificate& cert) {
  return {{"function", boolfn::to_json(cert.function)},
          {"bound", json_real(cert.bound)},
          {"lower", json_real(cert.lower)},
          {"upper", json_real(cert.upper)},
          {"gamma", adversary::to_json(cert.gamma)},
          {"witness", adversary::to_json(cert.witness)}};
}

nlohmann::json to_json(const Bracket& bracket) {
  return {{"lower", json_real(bracket.lower)},
          {"upper", json_real(bracket.upper)},
          {"gap", json_real(bracket.gap())},
          {"midpoint", json_real(bracket.midpoint())},
          {"method", bracket.method}};
}

nlohmann::json to_json(const CompositionReport& report) {
  nlohmann::json inner = nlohmann::json::array();
  for (const auto& c : report.inner) inner.push_back(to_json(c));
  return {{"inner", std::move(inner)},
          {"beta", reals(report.beta)},
          {"lhs", to_json(report.lhs)},
          {"rhs", to_json(report.rhs)},
          {"composed", {{"lower", json_real(report.composed_lower)}, {"upper", json_real(report.composed_upper)}}},
          {"scaled_outer", to_json(report.scaled_outer)},
          {"tolerance", json_real(report.tolerance)},
          {"difference", json_real(report.difference)},
          {"checks",
           {{"sides_agree", report.sides_agree},
            {"lower_direction", report.lower_direction_ok},
            {"upper_direction", report.upper_direction_ok},
            {"scaling_bracket", report.scaling_bracket_ok}}},
          {"pass", report.pass}};
}

nlohmann::json to_json(const IterationReport& report) {
  return {{"depth", report.depth},
          {"base", to_json(report.base)},
          {"predicted", json_real(report.predicted)},
          {"iterate", to_json(report.iterate)},
          {"composed", {{"lower", json_real(report.composed_lower)}, {"upper", json_real(report.composed_upper)}}},
          {"tolerance", json_real(report.tolerance)},
          {"checks",
           {{"contains_prediction", report.contains_prediction}, {"composed_consistent", report.composed_consistent}}},
          {"pass", report.pass}};
}

}  // namespace advbound::solver
