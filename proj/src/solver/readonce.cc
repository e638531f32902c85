#include "advbound/solver/readonce.h"

#include <cmath>
#include <stdexcept>

#include "advbound/adversary/compose.h"
#include "advbound/boolfn/composition.h"
#include "advbound/solver/gadget.h"

namespace advbound::solver {

namespace {

using boolfn::FormulaNode;
using boolfn::NodeKind;

void require_read_once(const boolfn::FormulaAst& ast, const adversary::CostVector& alpha) {
  if (!ast.root) throw std::invalid_argument("empty formula");
  if (!ast.read_once) throw std::invalid_argument("formula is not read-once: some variable appears more than once");
  if (!ast.covers_exactly_once()) {
    throw std::invalid_argument("formula must use each of x1..x" + std::to_string(ast.max_variable) +
                                " exactly once");
  }
  if (static_cast<int>(alpha.size()) != ast.max_variable) {
    throw std::invalid_argument("cost vector has length " + std::to_string(alpha.size()) + " but the formula has " +
                                std::to_string(ast.max_variable) + " variables");
  }
}

double bound_of(const FormulaNode& node, const adversary::CostVector& alpha, std::vector<TraceStep>& trace) {
  TraceStep step{boolfn::to_string(node), "", {}, 0.0};
  switch (node.kind) {
    case NodeKind::kLeaf:
      step.kind = "leaf";
      step.value = alpha[static_cast<std::size_t>(node.variable - 1)];
      break;
    case NodeKind::kNot:
      step.kind = "not";
      step.inputs = {bound_of(*node.lhs, alpha, trace)};
      step.value = step.inputs[0];
      break;
    case NodeKind::kAnd:
    case NodeKind::kOr: {
      step.kind = node.kind == NodeKind::kAnd ? "and" : "or";
      const double b1 = bound_of(*node.lhs, alpha, trace);
      const double b2 = bound_of(*node.rhs, alpha, trace);
      step.inputs = {b1, b2};
      step.value = gadget_cost_adv(node.kind == NodeKind::kAnd ? Gate::kAnd : Gate::kOr, b1, b2).value;
      break;
    }
  }
  trace.push_back(step);
  return step.value;
}

// Matrix and witness for a subformula, with inputs in left-to-right leaf order.
struct Piece {
  adversary::AdversaryMatrix gamma;
  adversary::MinimaxWitness witness;
  double beta = 0.0;
};

Piece build(const FormulaNode& node, const adversary::CostVector& alpha, const specmat::EigenOptions& opts,
            int size_cap) {
  switch (node.kind) {
    case NodeKind::kLeaf: {
      const auto id = boolfn::make_family(boolfn::Family::kId, 1);
      Piece leaf{{id, specmat::SymMatrix(id.domain())}, {id, {{1.0}, {1.0}}},
                 alpha[static_cast<std::size_t>(node.variable - 1)]};
      leaf.gamma.matrix.set(0, 1, 1.0);
      return leaf;
    }
    case NodeKind::kNot: {
      auto child = build(*node.lhs, alpha, opts, size_cap);
      const auto negated = child.gamma.function.negated();
      child.gamma.function = negated;
      child.witness.function = negated;
      return child;
    }
    case NodeKind::kAnd:
    case NodeKind::kOr:
      break;
  }
  auto lhs = build(*node.lhs, alpha, opts, size_cap);
  auto rhs = build(*node.rhs, alpha, opts, size_cap);
  const auto gadget = gadget_cost_adv(node.kind == NodeKind::kAnd ? Gate::kAnd : Gate::kOr, lhs.beta, rhs.beta);
  const boolfn::CompositionSpec spec(gadget.gamma.function, {lhs.gamma.function, rhs.gamma.function});
  return {adversary::compose_gamma(gadget.gamma, {lhs.gamma, rhs.gamma}, spec, opts, size_cap),
          adversary::compose_minimax(gadget.witness, {lhs.witness, rhs.witness}, spec, size_cap), gadget.value};
}

}  // namespace

ReadOnceBound readonce_bound(const boolfn::FormulaAst& ast, const adversary::CostVector& alpha) {
  require_read_once(ast, alpha);
  ReadOnceBound out;
  out.value = bound_of(*ast.root, alpha, out.trace);
  return out;
}

ReadOnceCertificate readonce_certificate(const boolfn::FormulaAst& ast, const adversary::CostVector& alpha,
                                         const specmat::EigenOptions& opts, int size_cap) {
  require_read_once(ast, alpha);
  if (ast.max_variable > size_cap) {
    throw std::invalid_argument("formula has " + std::to_string(ast.max_variable) + " variables, above the cap of " +
                                std::to_string(size_cap));
  }
  const auto piece = build(*ast.root, alpha, opts, size_cap);

  // Move bit j (leaf order) to position leaf_order[j].
  const auto perm = boolfn::leaf_order(*ast.root);
  const auto& in_leaf_order = piece.gamma.function;
  ReadOnceCertificate out;
  out.function = boolfn::permute_inputs(in_leaf_order, perm);
  std::vector<std::size_t> target(in_leaf_order.size());
  for (std::size_t k = 0; k < in_leaf_order.size(); ++k) {
    target[k] = *out.function.index_of(boolfn::permute_bits(in_leaf_order.domain()[k], perm));
  }
  out.gamma = adversary::AdversaryMatrix{out.function, specmat::SymMatrix(out.function.domain())};
  out.witness = adversary::MinimaxWitness{out.function, std::vector<std::vector<double>>(out.function.size())};
  for (std::size_t a = 0; a < target.size(); ++a) {
    for (std::size_t b = a; b < target.size(); ++b) {
      const double v = piece.gamma.matrix(a, b);
      if (v != 0.0) out.gamma.matrix.set(target[a], target[b], v);
    }
    auto& row = out.witness.p[target[a]];
    row.assign(perm.size(), 0.0);
    for (std::size_t j = 0; j < perm.size(); ++j) row[static_cast<std::size_t>(perm[j] - 1)] = piece.witness.p[a][j];
  }
  out.bound = piece.beta;
  out.lower = adversary::adv_value(out.gamma, alpha, opts);
  out.upper = adversary::mm_value(out.witness, alpha);
  return out;
}

}  // namespace advbound::solver
