#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "distcat/coherence.hpp"
#include "distcat/mor.hpp"

namespace distcat {

// Controlled operations on 2 (x) X: block matrices applied on the |0> or
// |1> block of the control qubit.
template <Semiring S>
Mor<S> ctrl0(const Mor<S>& u) {
  if (!u.is_endo()) throw std::invalid_argument("ctrl0: not an endomorphism");
  return conjugate(invert(copy_perm(u.dom())), dsum(u, identity<S>(u.dom())));
}

template <Semiring S>
Mor<S> ctrl1(const Mor<S>& v) {
  if (!v.is_endo()) throw std::invalid_argument("ctrl1: not an endomorphism");
  return conjugate(invert(copy_perm(v.dom())), dsum(identity<S>(v.dom()), v));
}

// Direct sum of 2^n endomorphisms indexed by the control register,
// as an operator on 2^{*n} (x) X.
template <Semiring S>
Mor<S> multi_ctrl(const std::vector<Mor<S>>& ops) {
  if (ops.empty() || (ops.size() & (ops.size() - 1)) != 0)
    throw std::invalid_argument("multi_ctrl: need a power-of-two operator count");
  const ObjExpr x = ops.front().dom();
  for (const auto& op : ops)
    if (!op.is_endo() || op.dom() != x)
      throw std::invalid_argument("multi_ctrl: operators must be endomorphisms on one object");
  std::size_t n = 0;
  while ((std::size_t{1} << n) < ops.size()) ++n;
  Mor<S> blocks = ops.front();
  for (std::size_t i = 1; i < ops.size(); ++i) blocks = dsum(blocks, ops[i]);
  if (n == 0) return blocks;
  return conjugate(invert(lambda_perm(n, x)), blocks);
}

// Dense discrete Fourier transform on n qubits; inverse flag takes the
// conjugate transpose.
CMor qft(std::size_t n, bool inverse = false);

// The three-controlled-NOT decomposition of the qubit swap: the middle gate
// is controlled from the second factor, built through dl rather than
// through sigma itself.
DiagramReport swap_decomposition_check();

// ---------------------------------------------------------------------------
// Circuits and statevectors

struct DenseBase {
  std::string label;
  CMor mat;
};

// Multiply-by-r mod K on the target register, fixing indices >= K.
struct ModMulBase {
  std::string label;
  std::uint64_t modulus = 0;
};

using BaseOp = std::variant<DenseBase, ModMulBase>;

struct Gate {
  enum class Kind { CtrlPower, Swap, Hadamard, QftBlock, DenseBlock };
  Kind kind = Kind::CtrlPower;
  // CtrlPower: the listed control qubits are extracted and compared against
  // `value`. Dense bases are stored pre-powered and applied as-is, with
  // `power` recording the exponent that went into the payload; for modmul
  // bases `power` is the multiplier itself.
  std::vector<std::size_t> qubits;
  std::uint64_t value = 1;
  std::uint64_t power = 1;
  std::size_t base_index = 0;
  bool inverse = false;  // QftBlock
};

// An ordered gate list over an n-qubit control register and a d-dimensional
// target register. Basis index = a * d + t with qubit 0 the least
// significant control bit.
struct Circuit {
  std::size_t n_controls = 0;
  std::size_t target_dim = 1;
  std::vector<BaseOp> bases;
  std::vector<Gate> gates;

  std::size_t total_dim() const { return (std::size_t{1} << n_controls) * target_dim; }
};

struct StateVec {
  std::size_t n_controls = 0;
  std::size_t target_dim = 1;
  std::vector<std::complex<double>> amps;

  static StateVec basis(std::size_t n, std::size_t d, std::uint64_t a, std::size_t t);
  std::size_t size() const { return amps.size(); }
  double norm() const;
};

StateVec apply(const Circuit& c, StateVec s);

enum class Register { Controls, Target };

// Probability marginal over one register.
std::vector<double> marginal(const StateVec& s, Register reg);

// Deterministic inverse-CDF sampling of the register marginal: outcomes are
// drawn with u = (rng() >> 11) * 2^-53 against the cumulative distribution.
std::map<std::uint64_t, std::uint64_t> sample(const StateVec& s, Register reg,
                                              std::uint64_t shots, std::uint64_t seed);

// Circuit builders for the iterator oracles. The naive form carries one
// value-controlled block per nonzero register value with payload u^a; the
// efficient form carries one singly-controlled block per qubit with payload
// u^{2^k}, the powers obtained by repeated squaring.
Circuit naive_iterator_circuit(const CMor& u, std::size_t n);
Circuit efficient_iterator_circuit(const CMor& u, std::size_t n);

}  // namespace distcat
