#include "distcat/quantum.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace distcat {

CMor qft(std::size_t n, bool inverse) {
  if (n == 0) throw std::invalid_argument("qft: need at least one qubit");
  const std::size_t dim = std::size_t{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  const double sign = inverse ? -1.0 : 1.0;
  CMor f(ObjExpr::qubits(n), ObjExpr::qubits(n));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) {
      // j*k mod dim keeps the angle argument small.
      double angle = sign * 2.0 * std::numbers::pi *
                     static_cast<double>((j * k) % dim) / static_cast<double>(dim);
      f.at(j, k) = std::polar(scale, angle);
    }
  return f;
}

DiagramReport swap_decomposition_check() {
  const ObjExpr two = ObjExpr::two();
  const CMor not_gate = perm_to_mor<ComplexField>(s_perm(ObjExpr::unit(), ObjExpr::unit()));
  const CMor cnot = ctrl1(not_gate);

  // Control on the second factor, through dl_{2,I,I}.
  const Perm dl = dl_perm(two, ObjExpr::unit(), ObjExpr::unit());
  const CMor reversed = conjugate(invert(dl), dsum(identity<ComplexField>(two), not_gate));

  const CMor composite = compose(cnot, compose(reversed, cnot));
  const CMor swap = perm_to_mor<ComplexField>(sigma_perm(two, two));
  return make_report("swap-decomposition", "three controlled additive symmetries",
                     discrepancy(composite, swap), 0.0);
}

StateVec StateVec::basis(std::size_t n, std::size_t d, std::uint64_t a, std::size_t t) {
  if (a >= (std::uint64_t{1} << n) || t >= d)
    throw std::invalid_argument("StateVec::basis: index out of range");
  StateVec s;
  s.n_controls = n;
  s.target_dim = d;
  s.amps.assign((std::size_t{1} << n) * d, {0.0, 0.0});
  s.amps[static_cast<std::size_t>(a) * d + t] = {1.0, 0.0};
  return s;
}

double StateVec::norm() const {
  double acc = 0.0;
  for (const auto& z : amps) acc += std::norm(z);
  return std::sqrt(acc);
}

namespace {

void apply_hadamard(StateVec& s, std::size_t k) {
  const std::size_t d = s.target_dim;
  const std::size_t stride = (std::size_t{1} << k) * d;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (std::size_t base = 0; base < s.amps.size(); base += 2 * stride)
    for (std::size_t off = 0; off < stride; ++off) {
      auto& a0 = s.amps[base + off];
      auto& a1 = s.amps[base + stride + off];
      const auto lo = inv_sqrt2 * (a0 + a1);
      const auto hi = inv_sqrt2 * (a0 - a1);
      a0 = lo;
      a1 = hi;
    }
}

void apply_swap(StateVec& s, std::size_t i, std::size_t j) {
  if (i == j) return;
  const std::size_t d = s.target_dim;
  const std::uint64_t bi = std::uint64_t{1} << i, bj = std::uint64_t{1} << j;
  const std::uint64_t n_ctrl = std::uint64_t{1} << s.n_controls;
  for (std::uint64_t a = 0; a < n_ctrl; ++a) {
    const bool vi = a & bi, vj = a & bj;
    if (vi == vj) continue;
    const std::uint64_t b = (a ^ bi) ^ bj;
    if (b < a) continue;
    for (std::size_t t = 0; t < d; ++t)
      std::swap(s.amps[a * d + t], s.amps[b * d + t]);
  }
}

void apply_dense_target(StateVec& s, const CMor& m, std::uint64_t a) {
  const std::size_t d = s.target_dim;
  std::vector<std::complex<double>> out(d, {0.0, 0.0});
  const std::size_t off = static_cast<std::size_t>(a) * d;
  for (std::size_t i = 0; i < d; ++i) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) acc += m.at(i, j) * s.amps[off + j];
    out[i] = acc;
  }
  for (std::size_t i = 0; i < d; ++i) s.amps[off + i] = out[i];
}

void apply_modmul_target(StateVec& s, const std::vector<std::size_t>& image,
                         std::uint64_t a) {
  const std::size_t d = s.target_dim;
  const std::size_t off = static_cast<std::size_t>(a) * d;
  std::vector<std::complex<double>> out(d);
  for (std::size_t t = 0; t < d; ++t) out[image[t]] = s.amps[off + t];
  for (std::size_t t = 0; t < d; ++t) s.amps[off + t] = out[t];
}

void apply_ctrl_power(StateVec& s, const Circuit& c, const Gate& g) {
  const std::uint64_t n_ctrl = std::uint64_t{1} << s.n_controls;

  const CMor* dense = nullptr;
  std::vector<std::size_t> image;
  if (const auto* db = std::get_if<DenseBase>(&c.bases[g.base_index])) {
    dense = &db->mat;
  } else {
    const auto& mm = std::get<ModMulBase>(c.bases[g.base_index]);
    const std::uint64_t k = mm.modulus;
    const std::uint64_t mult = g.power % k;
    image.resize(s.target_dim);
    for (std::size_t t = 0; t < s.target_dim; ++t)
      image[t] = t < k ? static_cast<std::size_t>((mult * t) % k) : t;
  }

  for (std::uint64_t a = 0; a < n_ctrl; ++a) {
    std::uint64_t sel = 0;
    for (std::size_t i = 0; i < g.qubits.size(); ++i)
      sel |= ((a >> g.qubits[i]) & 1) << i;
    if (sel != g.value) continue;
    if (dense)
      apply_dense_target(s, *dense, a);
    else
      apply_modmul_target(s, image, a);
  }
}

void apply_qft_block(StateVec& s, std::size_t lo, std::size_t hi, bool inverse) {
  const std::size_t w = hi - lo;
  const std::size_t dim = std::size_t{1} << w;
  const std::size_t d = s.target_dim;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  const double sign = inverse ? -1.0 : 1.0;
  // Precompute the w-bit DFT phases.
  std::vector<std::complex<double>> omega(dim);
  for (std::size_t j = 0; j < dim; ++j)
    omega[j] = std::polar(1.0, sign * 2.0 * std::numbers::pi *
                                   static_cast<double>(j) / static_cast<double>(dim));

  const std::uint64_t n_ctrl = std::uint64_t{1} << s.n_controls;
  const std::uint64_t mask = (std::uint64_t{1} << hi) - (std::uint64_t{1} << lo);
  std::vector<std::complex<double>> slice(dim), out(dim);
  for (std::uint64_t rest = 0; rest < n_ctrl; ++rest) {
    if (rest & mask) continue;  // enumerate register values with the block cleared
    for (std::size_t t = 0; t < d; ++t) {
      for (std::size_t v = 0; v < dim; ++v)
        slice[v] = s.amps[(rest | (static_cast<std::uint64_t>(v) << lo)) * d + t];
      for (std::size_t j = 0; j < dim; ++j) {
        std::complex<double> acc = 0.0;
        for (std::size_t k = 0; k < dim; ++k) acc += omega[(j * k) % dim] * slice[k];
        out[j] = scale * acc;
      }
      for (std::size_t v = 0; v < dim; ++v)
        s.amps[(rest | (static_cast<std::uint64_t>(v) << lo)) * d + t] = out[v];
    }
  }
}

}  // namespace

StateVec apply(const Circuit& c, StateVec s) {
  if (s.n_controls != c.n_controls || s.target_dim != c.target_dim)
    throw std::invalid_argument("apply: circuit and state dimensions differ");
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::Hadamard:
        apply_hadamard(s, g.qubits.at(0));
        break;
      case Gate::Kind::Swap:
        apply_swap(s, g.qubits.at(0), g.qubits.at(1));
        break;
      case Gate::Kind::CtrlPower:
        apply_ctrl_power(s, c, g);
        break;
      case Gate::Kind::QftBlock:
        apply_qft_block(s, g.qubits.front(), g.qubits.back() + 1, g.inverse);
        break;
      case Gate::Kind::DenseBlock: {
        const auto& db = std::get<DenseBase>(c.bases[g.base_index]);
        const std::uint64_t n_ctrl = std::uint64_t{1} << s.n_controls;
        for (std::uint64_t a = 0; a < n_ctrl; ++a) apply_dense_target(s, db.mat, a);
        break;
      }
    }
  }
  return s;
}

std::vector<double> marginal(const StateVec& s, Register reg) {
  const std::size_t d = s.target_dim;
  const std::size_t n_ctrl = std::size_t{1} << s.n_controls;
  if (reg == Register::Controls) {
    std::vector<double> p(n_ctrl, 0.0);
    for (std::size_t a = 0; a < n_ctrl; ++a)
      for (std::size_t t = 0; t < d; ++t) p[a] += std::norm(s.amps[a * d + t]);
    return p;
  }
  std::vector<double> p(d, 0.0);
  for (std::size_t a = 0; a < n_ctrl; ++a)
    for (std::size_t t = 0; t < d; ++t) p[t] += std::norm(s.amps[a * d + t]);
  return p;
}

std::map<std::uint64_t, std::uint64_t> sample(const StateVec& s, Register reg,
                                              std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("sample: need at least one shot");
  const std::vector<double> p = marginal(s, reg);
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    std::size_t lo = 0, hi = cdf.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (cdf[mid] <= u)
        lo = mid + 1;
      else
        hi = mid;
    }
    ++counts[lo];
  }
  return counts;
}

Circuit naive_iterator_circuit(const CMor& u, std::size_t n) {
  if (!u.is_endo()) throw std::invalid_argument("naive_iterator_circuit: not an endomorphism");
  if (n == 0) throw std::invalid_argument("naive_iterator_circuit: n must be at least 1");
  Circuit c;
  c.n_controls = n;
  c.target_dim = u.dom().dim();
  const std::uint64_t blocks = std::uint64_t{1} << n;
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  CMor payload = identity<ComplexField>(u.dom());
  for (std::uint64_t a = 1; a < blocks; ++a) {
    payload = compose(payload, u);
    c.bases.emplace_back(DenseBase{"U^" + std::to_string(a), payload});
    Gate g;
    g.kind = Gate::Kind::CtrlPower;
    g.qubits = all;
    g.value = a;
    g.power = a;
    g.base_index = c.bases.size() - 1;
    c.gates.push_back(g);
  }
  return c;
}

Circuit efficient_iterator_circuit(const CMor& u, std::size_t n) {
  if (!u.is_endo())
    throw std::invalid_argument("efficient_iterator_circuit: not an endomorphism");
  if (n == 0) throw std::invalid_argument("efficient_iterator_circuit: n must be at least 1");
  Circuit c;
  c.n_controls = n;
  c.target_dim = u.dom().dim();
  CMor payload = u;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) payload = compose(payload, payload);
    c.bases.emplace_back(
        DenseBase{"U^" + std::to_string(std::uint64_t{1} << k), payload});
    Gate g;
    g.kind = Gate::Kind::CtrlPower;
    g.qubits = {k};
    g.value = 1;
    g.power = std::uint64_t{1} << k;
    g.base_index = c.bases.size() - 1;
    c.gates.push_back(g);
  }
  return c;
}

}  // namespace distcat
