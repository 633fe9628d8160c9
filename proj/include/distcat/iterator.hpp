#pragma once

#include <cstdint>
#include <string>

#include "distcat/coherence.hpp"
#include "distcat/quantum.hpp"

namespace distcat {

// !^N(f): the direct sum f^0 + f^1 + ... + f^{N-1}.
template <Semiring S>
Mor<S> iterate_naive(const Mor<S>& f, std::uint64_t n_blocks) {
  if (!f.is_endo()) throw std::invalid_argument("iterate_naive: not an endomorphism");
  if (n_blocks == 0) throw std::invalid_argument("iterate_naive: need at least one block");
  Mor<S> acc = identity<S>(f.dom());
  for (std::uint64_t j = 1; j < n_blocks; ++j) acc = dsum(acc, power(f, j));
  return acc;
}

// The endomorphism of 2^{*n} (x) X that applies `block` on the target
// register when control qubit k is set (qubit 0 = least significant bit).
// The controlled block sits next to the target; qubit k is brought adjacent
// through multiplicative symmetries.
template <Semiring S>
Mor<S> stage(const Mor<S>& block, std::size_t k, std::size_t n) {
  if (!block.is_endo()) throw std::invalid_argument("stage: not an endomorphism");
  if (k >= n) throw std::invalid_argument("stage: qubit index out of range");
  const ObjExpr x = block.dom();
  const ObjExpr two = ObjExpr::two();

  Mor<S> inner = mtensor(identity<S>(ObjExpr::qubits(n - 1)), ctrl1(block));
  const std::size_t pos = n - 1 - k;  // tensor position of qubit k
  if (pos == n - 1) return inner;

  // Adjacent swaps moving position `pos` to position n-1.
  Perm route = identity_perm(ObjExpr::prod(ObjExpr::qubits(n), x));
  for (std::size_t p = pos; p + 1 < n; ++p) {
    Perm step = mtensor(
        identity_perm(ObjExpr::qubits(p)),
        mtensor(sigma_perm(two, two),
                identity_perm(ObjExpr::prod(ObjExpr::qubits(n - p - 2), x))));
    route = compose(step, route);
  }
  return conjugate(invert(route), inner);
}

// !^{2^n}(f) as the composite of n singly-controlled stages; the k-th stage
// carries f^{2^k}, each power the square of the previous one.
template <Semiring S>
Mor<S> iterate_efficient(const Mor<S>& f, std::size_t n) {
  if (!f.is_endo()) throw std::invalid_argument("iterate_efficient: not an endomorphism");
  if (n == 0) throw std::invalid_argument("iterate_efficient: need at least one qubit");
  Mor<S> pw = f;
  Mor<S> acc = stage(pw, 0, n);
  for (std::size_t k = 1; k < n; ++k) {
    pw = compose(pw, pw);
    acc = compose(stage(pw, k, n), acc);
  }
  return acc;
}

// lambda . efficient == naive . lambda, as matrices.
template <Semiring S>
DiagramReport verify_equivalence(const Mor<S>& f, std::size_t n, double tol) {
  const Perm lam = lambda_perm(n, f.dom());
  Mor<S> lhs = compose(lam, iterate_efficient(f, n));
  Mor<S> rhs = compose(iterate_naive(f, std::uint64_t{1} << n), lam);
  return make_report("iterator-equivalence",
                     "n=" + std::to_string(n) + " dim=" + std::to_string(f.dom().dim()) +
                         " over " + S::name,
                     discrepancy(lhs, rhs), S::exact ? 0.0 : tol);
}

struct GateCounts {
  std::uint64_t naive = 0;
  std::uint64_t efficient = 0;
};

// Controlled-block counts of the two circuit forms: 2^n - 1 value-controlled
// blocks (the all-zero block is the identity and elided) against n
// singly-controlled ones.
inline GateCounts gate_counts(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gate_counts: need at least one qubit");
  return {(std::uint64_t{1} << n) - 1, static_cast<std::uint64_t>(n)};
}

enum class IteratorForm { Naive, Efficient };

template <Semiring S>
struct IteratorBuild {
  std::size_t controls = 0;
  IteratorForm form = IteratorForm::Naive;
  Mor<S> result;
  std::size_t stage_count = 0;
};

template <Semiring S>
IteratorBuild<S> build_iterator(const Mor<S>& f, std::size_t n, IteratorForm form) {
  if (form == IteratorForm::Naive) {
    return {n, form, iterate_naive(f, std::uint64_t{1} << n),
            static_cast<std::size_t>(std::uint64_t{1} << n)};
  }
  return {n, form, iterate_efficient(f, n), n};
}

}  // namespace distcat
