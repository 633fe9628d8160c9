#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace distcat {

// Object expressions over {0, I, atoms, +, *}, with a derived dimension.
//
// Expressions are kept in a strict normal form: both tensors are
// right-nested and unit operands (I under *, 0 under +) are dropped at
// construction, so structural equality of two ObjExpr values decides
// object equality. Index conventions downstream assume this normal form.
class ObjExpr {
 public:
  enum class Kind { Zero, Unit, Atom, Sum, Prod };

  ObjExpr();  // Zero

  static ObjExpr zero();
  static ObjExpr unit();
  static ObjExpr atom(std::string label, std::size_t dim);
  static ObjExpr sum(const ObjExpr& a, const ObjExpr& b);
  static ObjExpr prod(const ObjExpr& a, const ObjExpr& b);

  // The distinguished qubit object, I + I.
  static ObjExpr two();

  // n-fold additive power x + x + ... + x (Zero for n = 0).
  static ObjExpr sum_pow(const ObjExpr& x, std::size_t n);
  // n-fold multiplicative power x * x * ... * x (Unit for n = 0).
  static ObjExpr prod_pow(const ObjExpr& x, std::size_t n);
  // two()^{*n}
  static ObjExpr qubits(std::size_t n);

  Kind kind() const noexcept;
  std::size_t dim() const noexcept;

  const std::string& label() const;  // Atom only
  ObjExpr left() const;              // Sum/Prod only
  ObjExpr right() const;             // Sum/Prod only

  bool operator==(const ObjExpr& other) const noexcept;
  bool operator!=(const ObjExpr& other) const noexcept { return !(*this == other); }

  // Compact text grammar: `0 | I | 2 | A<d> | (e+e) | (e*e)`.
  std::string str() const;
  static ObjExpr parse(std::string_view text);

  struct Node;  // defined in objexpr.cpp

 private:
  explicit ObjExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

}  // namespace distcat
