#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "distcat/objexpr.hpp"
#include "distcat/perm.hpp"
#include "distcat/semiring.hpp"

namespace distcat {

// A morphism: a dense row-major matrix over a scalar semiring, with typed
// domain and codomain. rows() == dim(cod), cols() == dim(dom).
template <Semiring S>
class Mor {
 public:
  using Scalar = typename S::Scalar;

  Mor(ObjExpr dom, ObjExpr cod)
      : dom_(std::move(dom)),
        cod_(std::move(cod)),
        entries_(dom_.dim() * cod_.dim(), S::zero()) {}

  Mor(ObjExpr dom, ObjExpr cod, std::vector<Scalar> entries)
      : dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
    if (entries_.size() != dom_.dim() * cod_.dim())
      throw std::invalid_argument("Mor: entry count does not match dom/cod dimensions");
  }

  const ObjExpr& dom() const noexcept { return dom_; }
  const ObjExpr& cod() const noexcept { return cod_; }
  std::size_t rows() const noexcept { return cod_.dim(); }
  std::size_t cols() const noexcept { return dom_.dim(); }

  Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols() + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }
  std::span<Scalar> entries() noexcept { return entries_; }

  bool is_endo() const noexcept { return dom_ == cod_; }

 private:
  ObjExpr dom_;
  ObjExpr cod_;
  std::vector<Scalar> entries_;
};

using CMor = Mor<ComplexField>;
using BMor = Mor<BoolRig>;

template <Semiring S>
Mor<S> identity(const ObjExpr& x) {
  Mor<S> m(x, x);
  for (std::size_t i = 0; i < x.dim(); ++i) m.at(i, i) = S::one();
  return m;
}

// f after g. Zero entries of f are skipped, which makes products with
// permutation-shaped operands quadratic instead of cubic.
template <Semiring S>
Mor<S> compose(const Mor<S>& f, const Mor<S>& g) {
  if (g.cod() != f.dom())
    throw std::invalid_argument("compose(Mor): codomain of g differs from domain of f");
  Mor<S> out(g.dom(), f.cod());
  const std::size_t cols = g.cols();
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < f.cols(); ++k) {
      const auto& a = f.at(i, k);
      if (S::is_zero(a)) continue;
      const auto* grow = &g.at(k, 0);
      auto* orow = &out.at(i, 0);
      for (std::size_t j = 0; j < cols; ++j)
        orow[j] = S::add(orow[j], S::mul(a, grow[j]));
    }
  }
  return out;
}

// Multiplicative tensor (Kronecker product in the lexicographic convention).
template <Semiring S>
Mor<S> mtensor(const Mor<S>& f, const Mor<S>& g) {
  Mor<S> out(ObjExpr::prod(f.dom(), g.dom()), ObjExpr::prod(f.cod(), g.cod()));
  for (std::size_t i1 = 0; i1 < f.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < f.cols(); ++j1) {
      const auto& a = f.at(i1, j1);
      if (S::is_zero(a)) continue;
      for (std::size_t i2 = 0; i2 < g.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < g.cols(); ++j2)
          out.at(i1 * g.rows() + i2, j1 * g.cols() + j2) = S::mul(a, g.at(i2, j2));
    }
  return out;
}

// Additive tensor (block diagonal).
template <Semiring S>
Mor<S> dsum(const Mor<S>& f, const Mor<S>& g) {
  Mor<S> out(ObjExpr::sum(f.dom(), g.dom()), ObjExpr::sum(f.cod(), g.cod()));
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) out.at(i, j) = f.at(i, j);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      out.at(f.rows() + i, f.cols() + j) = g.at(i, j);
  return out;
}

template <Semiring S>
Mor<S> perm_to_mor(const Perm& p) {
  Mor<S> out(p.source(), p.target());
  for (std::size_t j = 0; j < p.size(); ++j) out.at(p.apply(j), j) = S::one();
  return out;
}

// p . f by index relabelling (no matrix product).
template <Semiring S>
Mor<S> compose(const Perm& p, const Mor<S>& f) {
  if (f.cod() != p.source())
    throw std::invalid_argument("compose(Perm, Mor): codomain mismatch");
  Mor<S> out(f.dom(), p.target());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) out.at(p.apply(i), j) = f.at(i, j);
  return out;
}

// f . p by index relabelling.
template <Semiring S>
Mor<S> compose(const Mor<S>& f, const Perm& p) {
  if (p.target() != f.dom())
    throw std::invalid_argument("compose(Mor, Perm): domain mismatch");
  Mor<S> out(p.source(), f.cod());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) out.at(i, j) = f.at(i, p.apply(j));
  return out;
}

// p . f . p^{-1}; requires f to be an endomorphism on source(p).
template <Semiring S>
Mor<S> conjugate(const Perm& p, const Mor<S>& f) {
  if (!f.is_endo() || f.dom() != p.source())
    throw std::invalid_argument("conjugate: f must be an endomorphism on source(p)");
  Mor<S> out(p.target(), p.target());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) out.at(p.apply(i), p.apply(j)) = f.at(i, j);
  return out;
}

// k-fold composition by binary exponentiation.
template <Semiring S>
Mor<S> power(const Mor<S>& f, std::uint64_t k) {
  if (!f.is_endo()) throw std::invalid_argument("power: not an endomorphism");
  Mor<S> result = identity<S>(f.dom());
  Mor<S> base = f;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

// Largest entrywise difference; infinity when the shapes differ.
template <Semiring S>
double discrepancy(const Mor<S>& a, const Mor<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, S::diff_norm(a.entries()[i], b.entries()[i]));
  return worst;
}

inline CMor adjoint(const CMor& f) {
  CMor out(f.cod(), f.dom());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      out.at(j, i) = std::conj(f.at(i, j));
  return out;
}

// max-abs norm of M^dagger M - I.
inline double unitarity_defect(const CMor& m) {
  return discrepancy(compose(adjoint(m), m), identity<ComplexField>(m.dom()));
}

}  // namespace distcat
