#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "advbound/boolfn/boolean_function.h"

namespace advbound::boolfn {

enum class NodeKind { kLeaf, kNot, kAnd, kOr };

struct FormulaNode;
using NodePtr = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  NodeKind kind = NodeKind::kLeaf;
  int variable = 0;  // 1-based, leaves only
  NodePtr lhs;       // Not uses lhs only
  NodePtr rhs;

  static NodePtr leaf(int variable);
  static NodePtr negation(NodePtr child);
  static NodePtr gate(NodeKind kind, NodePtr lhs, NodePtr rhs);
};

/// Immutable formula tree over {AND, OR, NOT}.
struct FormulaAst {
  NodePtr root;
  /// No variable index appears in two leaves.
  bool read_once = false;
  /// Largest variable index in the tree.
  int max_variable = 0;
  /// Number of leaves.
  int leaf_count = 0;

  static FormulaAst from_root(NodePtr root);

  /// Every variable 1..max_variable appears exactly once.
  bool covers_exactly_once() const { return read_once && leaf_count == max_variable; }
};

class FormulaParseError : public std::invalid_argument {
 public:
  FormulaParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}
  /// 0-based character offset into the input text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: or := and ('|' and)* ; and := unary ('&' unary)* ;
/// unary := '~' unary | 'x' digits | '(' or ')'. Whitespace is ignored.
FormulaAst parse_formula(std::string_view text);

/// Canonical, fully parenthesized-where-needed text for the tree.
std::string to_string(const FormulaAst& ast);
std::string to_string(const FormulaNode& node);

int evaluate(const FormulaNode& node, const BitString& x);

/// Total function on {0,1}^n. Throws std::invalid_argument when a leaf
/// index exceeds n.
BooleanFunction formula_to_function(const FormulaAst& ast, int n);

/// Variable indices of the leaves, left to right.
std::vector<int> leaf_order(const FormulaNode& node);

}  // namespace advbound::boolfn
