#include "distcat/shor.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "distcat/random.hpp"

namespace distcat::shor {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 0) throw std::invalid_argument("mod_pow: zero modulus");
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::size_t default_controls(std::uint64_t k) {
  return 2 * static_cast<std::size_t>(std::bit_width(k - 1));
}

std::size_t target_qubits(std::uint64_t k) {
  return static_cast<std::size_t>(std::bit_width(k - 1));
}

ModMulPerm mod_mult_perm(std::uint64_t r, std::uint64_t k, std::size_t m) {
  if (k < 2) throw std::invalid_argument("mod_mult_perm: modulus must be at least 2");
  if (gcd(r % k, k) != 1)
    throw std::invalid_argument("mod_mult_perm: base must be coprime to the modulus");
  const std::uint64_t dim = std::uint64_t{1} << m;
  if (dim < k) throw std::invalid_argument("mod_mult_perm: 2^m must cover the modulus");
  const std::uint64_t mult = r % k;
  std::vector<std::size_t> map(dim);
  for (std::uint64_t p = 0; p < dim; ++p)
    map[p] = p < k ? static_cast<std::size_t>((mult * p) % k) : static_cast<std::size_t>(p);
  ObjExpr reg = ObjExpr::qubits(m);
  return ModMulPerm{r % k, k, m, Perm(reg, reg, std::move(map))};
}

Circuit oracle(std::uint64_t r, std::uint64_t k, std::size_t n, std::size_t m) {
  if (n == 0) throw std::invalid_argument("oracle: need at least one control qubit");
  // Validates coprimality and register width.
  (void)mod_mult_perm(r, k, m);
  Circuit c;
  c.n_controls = n;
  c.target_dim = std::size_t{1} << m;
  c.bases.emplace_back(ModMulBase{"mult mod " + std::to_string(k), k});
  std::uint64_t mult = r % k;
  for (std::size_t q = 0; q < n; ++q) {
    if (q > 0) mult = mod_pow(mult, 2, k);  // classical repeated squaring
    Gate g;
    g.kind = Gate::Kind::CtrlPower;
    g.qubits = {q};
    g.value = 1;
    g.power = mult;
    g.base_index = 0;
    c.gates.push_back(g);
  }
  return c;
}

std::vector<Convergent> convergents(std::uint64_t y, std::uint64_t q) {
  if (q == 0 || y >= q) throw std::invalid_argument("convergents: need 0 <= y < q");
  std::vector<Convergent> out;
  // h_{-1}/k_{-1} = 1/0, h_{-2}/k_{-2} = 0/1; first term is floor(y/q) = 0.
  std::uint64_t h_prev = 1, h_prev2 = 0;
  std::uint64_t k_prev = 0, k_prev2 = 1;
  std::uint64_t num = y, den = q;
  while (true) {
    const std::uint64_t a = num / den;
    const std::uint64_t h = a * h_prev + h_prev2;
    const std::uint64_t kk = a * k_prev + k_prev2;
    out.push_back({h, kk});
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = kk;
    const std::uint64_t rem = num % den;
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  return out;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> extract_factors(
    std::uint64_t r, std::uint64_t s, std::uint64_t k) {
  if (s == 0 || s % 2 != 0) return std::nullopt;
  const std::uint64_t half = mod_pow(r, s / 2, k);
  if (half == k - 1) return std::nullopt;  // r^{s/2} = -1 mod K
  const std::uint64_t f1 = gcd(half >= 1 ? half - 1 : k, k);
  const std::uint64_t f2 = gcd(half + 1, k);
  if (f1 > 1 && f1 < k && f2 > 1 && f2 < k) return std::make_pair(f1, f2);
  return std::nullopt;
}

namespace {

StateVec run_period_circuit(std::uint64_t r, std::uint64_t k, std::size_t n,
                            bool inverse_qft) {
  const std::size_t m = target_qubits(k);
  Circuit c = oracle(r, k, n, m);
  // Uniform superposition on the controls, then the oracle, then the QFT.
  std::vector<Gate> prep;
  for (std::size_t q = 0; q < n; ++q) {
    Gate h;
    h.kind = Gate::Kind::Hadamard;
    h.qubits = {q};
    prep.push_back(h);
  }
  c.gates.insert(c.gates.begin(), prep.begin(), prep.end());
  Gate qft_gate;
  qft_gate.kind = Gate::Kind::QftBlock;
  qft_gate.qubits.resize(n);
  for (std::size_t q = 0; q < n; ++q) qft_gate.qubits[q] = q;
  qft_gate.inverse = inverse_qft;
  c.gates.push_back(qft_gate);

  StateVec s = StateVec::basis(n, std::size_t{1} << m, 0, 1);
  return apply(c, s);
}

}  // namespace

std::vector<double> period_distribution(std::uint64_t r, std::uint64_t k, std::size_t n,
                                        bool inverse_qft) {
  return marginal(run_period_circuit(r, k, n, inverse_qft), Register::Controls);
}

FactorRun period_find(std::uint64_t r, std::uint64_t k, std::size_t n,
                      std::uint64_t shots, std::uint64_t seed, bool inverse_qft) {
  if (shots == 0) throw std::invalid_argument("period_find: need at least one shot");
  FactorRun run;
  run.modulus = k;
  run.base = r % k;
  run.controls = n;
  run.shots = shots;
  run.seed = seed;
  run.attempts = 1;

  const StateVec s = run_period_circuit(r, k, n, inverse_qft);
  run.counts = sample(s, Register::Controls, shots, derive_seed(seed, "measure"));

  // Outcomes by decreasing count, ties by value.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> outcomes(run.counts.begin(),
                                                                run.counts.end());
  std::sort(outcomes.begin(), outcomes.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  const std::uint64_t q_total = std::uint64_t{1} << n;
  for (const auto& [y, count] : outcomes) {
    for (const Convergent& conv : convergents(y, q_total)) {
      ++run.convergents_examined;
      if (conv.den == 0) continue;
      for (std::uint64_t mult = 1; mult <= kConvergentMultiplierBound; ++mult) {
        const std::uint64_t cand = conv.den * mult;
        if (cand == 0 || cand >= k) continue;
        if (mod_pow(r, cand, k) == 1) {
          run.period = cand;
          return run;
        }
      }
    }
  }
  return run;
}

FactorRun factor(std::uint64_t k, std::size_t controls, std::uint64_t shots,
                 std::uint64_t seed, std::size_t max_attempts,
                 std::optional<std::uint64_t> fixed_base, bool inverse_qft) {
  if (k < 2) throw std::invalid_argument("factor: modulus must be at least 2");
  FactorRun run;
  run.modulus = k;
  run.seed = seed;

  if (k % 2 == 0) {
    run.factors = std::make_pair(std::uint64_t{2}, k / 2);
    run.note = "even modulus, no simulation needed";
    return run;
  }
  if (controls == 0) controls = default_controls(k);

  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::uint64_t r;
    if (fixed_base) {
      r = *fixed_base % k;
    } else {
      auto rng = make_engine(seed, "base-choice", attempt);
      r = std::uniform_int_distribution<std::uint64_t>(2, k - 1)(rng);
    }
    const std::uint64_t g = gcd(r, k);
    if (g > 1 && g < k) {
      run.base = r;
      run.controls = controls;
      run.shots = shots;
      run.attempts = attempt + 1;
      run.factors = std::make_pair(g, k / g);
      run.note = "gcd shortcut";
      return run;
    }
    if (g == k) continue;  // r = 0 mod K, useless draw

    FactorRun attempt_run = period_find(r, k, controls, shots,
                                        derive_seed(seed, "attempt", attempt), inverse_qft);
    attempt_run.attempts = attempt + 1;
    if (attempt_run.period) {
      attempt_run.factors = extract_factors(r, *attempt_run.period, k);
      if (attempt_run.factors) {
        return attempt_run;
      }
    }
    run = attempt_run;
  }
  if (!run.factors) run.note = "no nontrivial factor found";
  return run;
}

}  // namespace distcat::shor
