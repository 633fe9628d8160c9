#include "distcat/objexpr.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace distcat {

struct ObjExpr::Node {
  Kind kind;
  std::size_t dim;
  std::string label;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

namespace {

const std::shared_ptr<const ObjExpr::Node>& zero_node() {
  static const auto node = std::make_shared<const ObjExpr::Node>(
      ObjExpr::Node{ObjExpr::Kind::Zero, 0, {}, nullptr, nullptr});
  return node;
}

const std::shared_ptr<const ObjExpr::Node>& unit_node() {
  static const auto node = std::make_shared<const ObjExpr::Node>(
      ObjExpr::Node{ObjExpr::Kind::Unit, 1, {}, nullptr, nullptr});
  return node;
}

bool node_equal(const ObjExpr::Node* a, const ObjExpr::Node* b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->dim != b->dim) return false;
  switch (a->kind) {
    case ObjExpr::Kind::Zero:
    case ObjExpr::Kind::Unit:
      return true;
    case ObjExpr::Kind::Atom:
      return a->label == b->label;
    case ObjExpr::Kind::Sum:
    case ObjExpr::Kind::Prod:
      return node_equal(a->left.get(), b->left.get()) &&
             node_equal(a->right.get(), b->right.get());
  }
  return false;
}

}  // namespace

ObjExpr::ObjExpr() : node_(zero_node()) {}
ObjExpr::ObjExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

ObjExpr ObjExpr::zero() { return ObjExpr(zero_node()); }
ObjExpr ObjExpr::unit() { return ObjExpr(unit_node()); }

ObjExpr ObjExpr::atom(std::string label, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("atom dimension must be positive");
  return ObjExpr(std::make_shared<const Node>(
      Node{Kind::Atom, dim, std::move(label), nullptr, nullptr}));
}

ObjExpr ObjExpr::sum(const ObjExpr& a, const ObjExpr& b) {
  if (a.kind() == Kind::Zero) return b;
  if (b.kind() == Kind::Zero) return a;
  if (a.kind() == Kind::Sum) {
    // re-associate to the right: (x+y)+b -> x+(y+b)
    return sum(a.left(), sum(a.right(), b));
  }
  return ObjExpr(std::make_shared<const Node>(
      Node{Kind::Sum, a.dim() + b.dim(), {}, a.node_, b.node_}));
}

ObjExpr ObjExpr::prod(const ObjExpr& a, const ObjExpr& b) {
  if (a.kind() == Kind::Unit) return b;
  if (b.kind() == Kind::Unit) return a;
  if (a.kind() == Kind::Prod) {
    return prod(a.left(), prod(a.right(), b));
  }
  return ObjExpr(std::make_shared<const Node>(
      Node{Kind::Prod, a.dim() * b.dim(), {}, a.node_, b.node_}));
}

ObjExpr ObjExpr::two() {
  static const ObjExpr t = sum(unit(), unit());
  return t;
}

ObjExpr ObjExpr::sum_pow(const ObjExpr& x, std::size_t n) {
  ObjExpr acc = zero();
  for (std::size_t i = 0; i < n; ++i) acc = sum(acc, x);
  return acc;
}

ObjExpr ObjExpr::prod_pow(const ObjExpr& x, std::size_t n) {
  ObjExpr acc = unit();
  for (std::size_t i = 0; i < n; ++i) acc = prod(acc, x);
  return acc;
}

ObjExpr ObjExpr::qubits(std::size_t n) { return prod_pow(two(), n); }

ObjExpr::Kind ObjExpr::kind() const noexcept { return node_->kind; }
std::size_t ObjExpr::dim() const noexcept { return node_->dim; }

const std::string& ObjExpr::label() const {
  if (node_->kind != Kind::Atom) throw std::logic_error("label(): not an atom");
  return node_->label;
}

ObjExpr ObjExpr::left() const {
  if (node_->kind != Kind::Sum && node_->kind != Kind::Prod)
    throw std::logic_error("left(): not a sum or product");
  return ObjExpr(node_->left);
}

ObjExpr ObjExpr::right() const {
  if (node_->kind != Kind::Sum && node_->kind != Kind::Prod)
    throw std::logic_error("right(): not a sum or product");
  return ObjExpr(node_->right);
}

bool ObjExpr::operator==(const ObjExpr& other) const noexcept {
  return node_equal(node_.get(), other.node_.get());
}

namespace {

void print_expr(const ObjExpr::Node* n, std::string& out) {
  switch (n->kind) {
    case ObjExpr::Kind::Zero:
      out += '0';
      return;
    case ObjExpr::Kind::Unit:
      out += 'I';
      return;
    case ObjExpr::Kind::Atom:
      out += 'A';
      out += std::to_string(n->dim);
      return;
    case ObjExpr::Kind::Sum:
      if (n->left->kind == ObjExpr::Kind::Unit &&
          n->right->kind == ObjExpr::Kind::Unit) {
        out += '2';
        return;
      }
      out += '(';
      print_expr(n->left.get(), out);
      out += '+';
      print_expr(n->right.get(), out);
      out += ')';
      return;
    case ObjExpr::Kind::Prod:
      out += '(';
      print_expr(n->left.get(), out);
      out += '*';
      print_expr(n->right.get(), out);
      out += ')';
      return;
  }
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) throw std::invalid_argument("unexpected end of object expression");
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c)
      throw std::invalid_argument(std::string("expected '") + c + "' in object expression");
    ++pos;
  }

  ObjExpr parse_expr() {
    char c = peek();
    switch (c) {
      case '0':
        ++pos;
        return ObjExpr::zero();
      case 'I':
        ++pos;
        return ObjExpr::unit();
      case '2':
        ++pos;
        return ObjExpr::two();
      case 'A': {
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("atom requires a dimension, e.g. A3");
        std::size_t d = std::stoull(std::string(text.substr(start, pos - start)));
        return ObjExpr::atom("A", d);
      }
      case '(': {
        ++pos;
        ObjExpr lhs = parse_expr();
        char op = peek();
        if (op != '+' && op != '*')
          throw std::invalid_argument("expected '+' or '*' in object expression");
        ++pos;
        ObjExpr rhs = parse_expr();
        expect(')');
        return op == '+' ? ObjExpr::sum(lhs, rhs) : ObjExpr::prod(lhs, rhs);
      }
      default:
        throw std::invalid_argument(std::string("unexpected character '") + c +
                                    "' in object expression");
    }
  }
};

}  // namespace

std::string ObjExpr::str() const {
  std::string out;
  print_expr(node_.get(), out);
  return out;
}

ObjExpr ObjExpr::parse(std::string_view text) {
  Parser p{text};
  ObjExpr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw std::invalid_argument("trailing characters in object expression");
  return e;
}

}  // namespace distcat
