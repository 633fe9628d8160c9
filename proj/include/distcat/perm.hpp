#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "distcat/objexpr.hpp"

namespace distcat {

// A canonical isomorphism realised as an index bijection between the
// lexicographic bases of two object expressions. map()[i] is the target
// index of source basis index i.
class Perm {
 public:
  Perm(ObjExpr source, ObjExpr target, std::vector<std::size_t> map);

  const ObjExpr& source() const noexcept { return source_; }
  const ObjExpr& target() const noexcept { return target_; }
  std::span<const std::size_t> map() const noexcept { return map_; }
  std::size_t size() const noexcept { return map_.size(); }
  std::size_t apply(std::size_t i) const { return map_[i]; }

  bool is_identity_map() const noexcept;
  bool operator==(const Perm& other) const noexcept;
  bool operator!=(const Perm& other) const noexcept { return !(*this == other); }

 private:
  ObjExpr source_;
  ObjExpr target_;
  std::vector<std::size_t> map_;
};

Perm identity_perm(const ObjExpr& x);

// dl: A*(B+C) -> (A*B)+(A*C)
Perm dl_perm(const ObjExpr& a, const ObjExpr& b, const ObjExpr& c);
// dr: (X+Y)*Z -> (X*Z)+(Y*Z); the identity index map under lexicographic order.
Perm dr_perm(const ObjExpr& x, const ObjExpr& y, const ObjExpr& z);
// sigma: X*Y -> Y*X, the perfect shuffle.
Perm sigma_perm(const ObjExpr& x, const ObjExpr& y);
// s: A+B -> B+A, block rotation.
Perm s_perm(const ObjExpr& a, const ObjExpr& b);
// lambda^{(n)}: 2^{*n} * X -> 2^n-fold sum of X, built by the dr recursion.
// Rejects n = 0.
Perm lambda_perm(std::size_t n, const ObjExpr& x);
// 2*X -> X+X, the component of the diagonal natural isomorphism
// (dr with unit summands).
Perm copy_perm(const ObjExpr& x);

Perm invert(const Perm& p);
// p after q; requires target(q) == source(p).
Perm compose(const Perm& p, const Perm& q);
Perm mtensor(const Perm& p, const Perm& q);
Perm dsum(const Perm& p, const Perm& q);

}  // namespace distcat
