#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>

namespace distcat {

// Scalar carrier for morphism entries. `exact` semirings compare entries
// bit for bit; inexact ones go through diff_norm and a tolerance.
template <class S>
concept Semiring = requires(const typename S::Scalar& a, const typename S::Scalar& b) {
  typename S::Scalar;
  { S::zero() } -> std::convertible_to<typename S::Scalar>;
  { S::one() } -> std::convertible_to<typename S::Scalar>;
  { S::add(a, b) } -> std::convertible_to<typename S::Scalar>;
  { S::mul(a, b) } -> std::convertible_to<typename S::Scalar>;
  { S::is_zero(a) } -> std::convertible_to<bool>;
  { S::diff_norm(a, b) } -> std::convertible_to<double>;
  { S::exact } -> std::convertible_to<bool>;
};

// Complex double scalars: the Hilbert-space instantiation. Carries the
// optional structure (subtraction, conjugation, norm) the boolean rig lacks.
struct ComplexField {
  using Scalar = std::complex<double>;
  static constexpr bool exact = false;
  static constexpr const char* name = "complex";

  static Scalar zero() { return {0.0, 0.0}; }
  static Scalar one() { return {1.0, 0.0}; }
  static Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
  static Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
  static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
  static Scalar conj(const Scalar& a) { return std::conj(a); }
  static double norm(const Scalar& a) { return std::abs(a); }
  static bool is_zero(const Scalar& a) { return a.real() == 0.0 && a.imag() == 0.0; }
  static double diff_norm(const Scalar& a, const Scalar& b) { return std::abs(a - b); }
};

// Boolean rig: or/and, no subtraction. All canonical maps stay invertible
// here because they are permutations, so the strong-distributivity layer
// works unchanged.
struct BoolRig {
  using Scalar = std::uint8_t;
  static constexpr bool exact = true;
  static constexpr const char* name = "boolean";

  static Scalar zero() { return 0; }
  static Scalar one() { return 1; }
  static Scalar add(Scalar a, Scalar b) { return a | b; }
  static Scalar mul(Scalar a, Scalar b) { return a & b; }
  static bool is_zero(Scalar a) { return a == 0; }
  static double diff_norm(Scalar a, Scalar b) { return a == b ? 0.0 : 1.0; }
};

}  // namespace distcat
