#include "advbound/boolfn/formula.h"

#include <cctype>
#include <limits>
#include <set>

namespace advbound::boolfn {

NodePtr FormulaNode::leaf(int variable) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = NodeKind::kLeaf;
  n->variable = variable;
  return n;
}

NodePtr FormulaNode::negation(NodePtr child) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = NodeKind::kNot;
  n->lhs = std::move(child);
  return n;
}

NodePtr FormulaNode::gate(NodeKind kind, NodePtr lhs, NodePtr rhs) {
  if (kind != NodeKind::kAnd && kind != NodeKind::kOr) {
    throw std::invalid_argument("binary gate must be AND or OR");
  }
  auto n = std::make_shared<FormulaNode>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

namespace {

void collect_leaves(const FormulaNode& node, std::vector<int>& out) {
  switch (node.kind) {
    case NodeKind::kLeaf: out.push_back(node.variable); break;
    case NodeKind::kNot: collect_leaves(*node.lhs, out); break;
    default:
      collect_leaves(*node.lhs, out);
      collect_leaves(*node.rhs, out);
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    auto node = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw FormulaParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_or() {
    auto node = parse_and();
    while (accept('|')) node = FormulaNode::gate(NodeKind::kOr, node, parse_and());
    return node;
  }

  NodePtr parse_and() {
    auto node = parse_unary();
    while (accept('&')) node = FormulaNode::gate(NodeKind::kAnd, node, parse_unary());
    return node;
  }

  NodePtr parse_unary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of formula");
    const char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return FormulaNode::negation(parse_unary());
    }
    if (c == '(') {
      ++pos_;
      auto node = parse_or();
      if (!accept(')')) fail("expected ')'");
      return node;
    }
    if (c == 'x' || c == 'X') {
      const std::size_t start = pos_;
      ++pos_;
      long long index = 0;
      std::size_t digits = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        index = index * 10 + (text_[pos_] - '0');
        if (index > std::numeric_limits<int>::max()) fail("variable index too large");
        ++pos_;
        ++digits;
      }
      if (digits == 0) fail("expected digits after 'x'");
      if (index < 1) throw FormulaParseError("variable index must be >= 1", start);
      return FormulaNode::leaf(static_cast<int>(index));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(NodeKind kind) {
  switch (kind) {
    case NodeKind::kOr: return 1;
    case NodeKind::kAnd: return 2;
    default: return 3;
  }
}

void print(const FormulaNode& node, std::string& out) {
  switch (node.kind) {
    case NodeKind::kLeaf:
      out += "x" + std::to_string(node.variable);
      return;
    case NodeKind::kNot:
      out += "~";
      if (node.lhs->kind == NodeKind::kAnd || node.lhs->kind == NodeKind::kOr) {
        out += "(";
        print(*node.lhs, out);
        out += ")";
      } else {
        print(*node.lhs, out);
      }
      return;
    default: {
      const int prec = precedence(node.kind);
      const char* op = node.kind == NodeKind::kAnd ? " & " : " | ";
      // Left-associative chains need no parentheses on the left.
      const bool wrap_l = precedence(node.lhs->kind) < prec;
      const bool wrap_r = precedence(node.rhs->kind) <= prec;
      if (wrap_l) out += "(";
      print(*node.lhs, out);
      if (wrap_l) out += ")";
      out += op;
      if (wrap_r) out += "(";
      print(*node.rhs, out);
      if (wrap_r) out += ")";
    }
  }
}

}  // namespace

FormulaAst FormulaAst::from_root(NodePtr root) {
  FormulaAst ast;
  ast.root = std::move(root);
  std::vector<int> leaves;
  collect_leaves(*ast.root, leaves);
  std::set<int> seen(leaves.begin(), leaves.end());
  ast.read_once = seen.size() == leaves.size();
  ast.leaf_count = static_cast<int>(leaves.size());
  ast.max_variable = seen.empty() ? 0 : *seen.rbegin();
  return ast;
}

FormulaAst parse_formula(std::string_view text) { return FormulaAst::from_root(Parser(text).parse()); }

std::string to_string(const FormulaNode& node) {
  std::string out;
  print(node, out);
  return out;
}

std::string to_string(const FormulaAst& ast) { return to_string(*ast.root); }

int evaluate(const FormulaNode& node, const BitString& x) {
  switch (node.kind) {
    case NodeKind::kLeaf: return x.bit(node.variable);
    case NodeKind::kNot: return 1 - evaluate(*node.lhs, x);
    case NodeKind::kAnd: return evaluate(*node.lhs, x) & evaluate(*node.rhs, x);
    case NodeKind::kOr: return evaluate(*node.lhs, x) | evaluate(*node.rhs, x);
  }
  return 0;
}

BooleanFunction formula_to_function(const FormulaAst& ast, int n) {
  if (ast.max_variable > n) {
    throw std::invalid_argument("formula uses x" + std::to_string(ast.max_variable) +
                                " but n = " + std::to_string(n));
  }
  return BooleanFunction::total(n, [&](const BitString& x) { return evaluate(*ast.root, x); });
}

std::vector<int> leaf_order(const FormulaNode& node) {
  std::vector<int> out;
  collect_leaves(node, out);
  return out;
}

}  // namespace advbound::boolfn
