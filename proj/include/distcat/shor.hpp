#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distcat/perm.hpp"
#include "distcat/quantum.hpp"

namespace distcat::shor {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Multiply-by-r mod K on a 2^m-dimensional register: p < K maps to r*p mod K,
// padding indices p >= K are fixed. Requires gcd(r, K) = 1 and 2^m >= K.
struct ModMulPerm {
  std::uint64_t base = 1;
  std::uint64_t modulus = 0;
  std::size_t m = 0;
  Perm perm;
};

ModMulPerm mod_mult_perm(std::uint64_t r, std::uint64_t k, std::size_t m);

// The period-finding oracle |x>|p> -> |x>|r^x p mod K>: n stages, stage k
// a fresh multiply-by-(r^{2^k} mod K) permutation controlled on qubit k.
Circuit oracle(std::uint64_t r, std::uint64_t k, std::size_t n, std::size_t m);

struct Convergent {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

// All continued-fraction convergents of y/q, starting from 0/1.
// Requires 0 <= y < q.
std::vector<Convergent> convergents(std::uint64_t y, std::uint64_t q);

// gcd(r^{s/2} -+ 1, K) when s is even and r^{s/2} != -1 mod K and both
// divisors are nontrivial; absence is a value.
std::optional<std::pair<std::uint64_t, std::uint64_t>> extract_factors(
    std::uint64_t r, std::uint64_t s, std::uint64_t k);

// Record of one period-finding / factoring attempt.
struct FactorRun {
  std::uint64_t modulus = 0;
  std::uint64_t base = 0;
  std::size_t controls = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::size_t convergents_examined = 0;
  std::optional<std::uint64_t> period;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
  std::string note;
};

// Candidate periods are convergent denominators and their small multiples;
// each is verified classically against r^q = 1 mod K.
inline constexpr std::uint64_t kConvergentMultiplierBound = 3;

// Uniform superposition on the controls, oracle, QFT on the controls,
// sample, continued fractions. The forward transform is the default; the
// inverse gives the mirror-image outcome distribution and identical
// period candidates.
FactorRun period_find(std::uint64_t r, std::uint64_t k, std::size_t n,
                      std::uint64_t shots, std::uint64_t seed,
                      bool inverse_qft = false);

// Post-QFT probability over the control register for base r mod K
// (the distribution period_find samples from).
std::vector<double> period_distribution(std::uint64_t r, std::uint64_t k, std::size_t n,
                                        bool inverse_qft = false);

// Full factoring loop. controls = 0 picks the default width
// n = 2*ceil(log2 K). A fixed base skips the random base draws.
FactorRun factor(std::uint64_t k, std::size_t controls, std::uint64_t shots,
                 std::uint64_t seed, std::size_t max_attempts,
                 std::optional<std::uint64_t> fixed_base = std::nullopt,
                 bool inverse_qft = false);

std::size_t default_controls(std::uint64_t k);
std::size_t target_qubits(std::uint64_t k);

}  // namespace distcat::shor
