#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "distcat/iterator.hpp"
#include "distcat/json_io.hpp"
#include "distcat/random.hpp"
#include "distcat/suites.hpp"

using namespace distcat;

namespace {

ObjExpr obj(std::size_t dim) {
  return dim == 1 ? ObjExpr::unit() : ObjExpr::atom("A", dim);
}

const ObjExpr kI = ObjExpr::unit();
const ObjExpr kTwo = ObjExpr::two();

CMor not_gate() { return perm_to_mor<ComplexField>(s_perm(kI, kI)); }

// Dense matrix of a circuit, column by column through the simulator.
CMor circuit_matrix(const Circuit& c) {
  const std::size_t total = c.total_dim();
  const ObjExpr dom = ObjExpr::prod(ObjExpr::qubits(c.n_controls), obj(c.target_dim));
  CMor m(dom, dom);
  for (std::size_t col = 0; col < total; ++col) {
    StateVec s = StateVec::basis(c.n_controls, c.target_dim, col / c.target_dim,
                                 col % c.target_dim);
    const StateVec out = apply(c, s);
    for (std::size_t row = 0; row < total; ++row) m.at(row, col) = out.amps[row];
  }
  return m;
}

}  // namespace

TEST_CASE("controlled operations") {
  // ctrl1(NOT) is CNOT, the [0,1,3,2] permutation
  const CMor cnot = ctrl1(not_gate());
  const std::size_t image[] = {0, 1, 3, 2};
  for (std::size_t j = 0; j < 4; ++j)
    CHECK(cnot.at(image[j], j) == std::complex<double>(1.0, 0.0));
  CHECK(cnot.dom() == ObjExpr::prod(kTwo, kTwo));

  CHECK(discrepancy(ctrl0(identity<ComplexField>(obj(3))),
                    identity<ComplexField>(ObjExpr::prod(kTwo, obj(3)))) == 0.0);

  // block forms: C0(U) has U in the upper-left block, C1(V) in the lower-right
  std::mt19937_64 rng(3);
  const CMor u = random_unitary(obj(3), rng);
  const CMor v = random_unitary(obj(3), rng);
  const CMor c0 = ctrl0(u), c1 = ctrl1(v);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(c0.at(i, j) == u.at(i, j));
      CHECK(c0.at(3 + i, 3 + j) == std::complex<double>(i == j ? 1.0 : 0.0, 0.0));
      CHECK(c1.at(i, j) == std::complex<double>(i == j ? 1.0 : 0.0, 0.0));
      CHECK(c1.at(3 + i, 3 + j) == v.at(i, j));
      CHECK(c0.at(i, 3 + j) == std::complex<double>(0.0, 0.0));
      CHECK(c0.at(3 + i, j) == std::complex<double>(0.0, 0.0));
    }

  // Ctrl0(U) . Ctrl1(V) = U + V = Ctrl1(V) . Ctrl0(U)
  const CMor both = compose(c0, c1);
  CHECK(discrepancy(both, compose(c1, c0)) == 0.0);
  const CMor direct = dsum(u, v);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(both.at(i, j) == direct.at(i, j));

  CHECK_THROWS_AS(ctrl1(random_complex(obj(2), obj(3), rng)), std::invalid_argument);
}

TEST_CASE("multi_ctrl") {
  std::mt19937_64 rng(5);
  const CMor u = random_unitary(obj(2), rng);
  const CMor v = random_unitary(obj(2), rng);

  {
    const CMor pair = multi_ctrl<ComplexField>({u, v});
    const CMor direct = dsum(u, v);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(pair.at(i, j) == direct.at(i, j));
  }

  {
    std::vector<CMor> scalars;
    std::vector<std::complex<double>> us;
    for (int i = 0; i < 8; ++i) {
      us.emplace_back(std::cos(0.3 * i), std::sin(0.3 * i));
      scalars.emplace_back(kI, kI, std::vector<std::complex<double>>{us.back()});
    }
    const CMor diag = multi_ctrl(scalars);
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(diag.at(i, i) - us[i]) == 0.0);
  }

  // cross-module: iterate_naive equals multi_ctrl of the powers under lambda
  {
    const std::size_t n = 3;
    std::vector<CMor> powers;
    for (std::size_t a = 0; a < (std::size_t{1} << n); ++a) powers.push_back(power(u, a));
    const CMor via_multi = multi_ctrl(powers);
    const Perm lam = lambda_perm(n, u.dom());
    const CMor via_naive =
        compose(invert(lam), compose(iterate_naive(u, std::uint64_t{1} << n), lam));
    CHECK(discrepancy(via_multi, via_naive) <= 1e-10);
  }

  CHECK_THROWS_AS(multi_ctrl<ComplexField>({u, v, u}), std::invalid_argument);
}

TEST_CASE("swap decomposition") {
  const DiagramReport r = swap_decomposition_check();
  CHECK(r.pass);
  CHECK(r.discrepancy == 0.0);

  const CMor swap = perm_to_mor<ComplexField>(sigma_perm(kTwo, kTwo));
  CHECK(discrepancy(compose(swap, swap), identity<ComplexField>(swap.dom())) == 0.0);

  // conjugating a control by SWAP moves it to the other qubit
  std::mt19937_64 rng(7);
  const CMor v = random_unitary(kTwo, rng);
  // dl-route for control-on-the-second-factor: dim(V) = 2 here
  const Perm dl = dl_perm(kTwo, kI, kI);
  const CMor from_other = conjugate(invert(dl), dsum(identity<ComplexField>(kTwo), v));
  CHECK(discrepancy(compose(swap, compose(ctrl1(v), swap)), from_other) <= 1e-12);
}

TEST_CASE("qft") {
  // n=1 is the Hadamard
  const CMor h = qft(1);
  const double r = 1.0 / std::numbers::sqrt2;
  CHECK(std::abs(h.at(0, 0) - r) < 1e-15);
  CHECK(std::abs(h.at(0, 1) - r) < 1e-15);
  CHECK(std::abs(h.at(1, 0) - r) < 1e-15);
  CHECK(std::abs(h.at(1, 1) + r) < 1e-15);

  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(discrepancy(compose(qft(n), qft(n, true)),
                      identity<ComplexField>(ObjExpr::qubits(n))) <= 1e-10);
    CHECK(unitarity_defect(qft(n)) <= 1e-10);
  }

  // column at |0> is uniform
  const CMor f3 = qft(3);
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(std::abs(f3.at(i, 0) - 1.0 / std::sqrt(8.0)) < 1e-12);

  CHECK_THROWS_AS(qft(0), std::invalid_argument);
}

TEST_CASE("statevector gates") {
  // empty circuit
  Circuit empty;
  empty.n_controls = 2;
  empty.target_dim = 3;
  const StateVec s = StateVec::basis(2, 3, 1, 2);
  const StateVec out = apply(empty, s);
  CHECK(out.amps == s.amps);

  // Hadamard on |0>
  {
    Circuit c;
    c.n_controls = 1;
    c.target_dim = 1;
    Gate g;
    g.kind = Gate::Kind::Hadamard;
    g.qubits = {0};
    c.gates.push_back(g);
    const StateVec plus = apply(c, StateVec::basis(1, 1, 0, 0));
    CHECK(std::abs(plus.amps[0] - 1.0 / std::numbers::sqrt2) < 1e-15);
    CHECK(std::abs(plus.amps[1] - 1.0 / std::numbers::sqrt2) < 1e-15);
  }

  // QftBlock agrees with the dense qft matrix applied to the control register
  {
    Circuit c;
    c.n_controls = 3;
    c.target_dim = 2;
    Gate g;
    g.kind = Gate::Kind::QftBlock;
    g.qubits = {0, 1, 2};
    c.gates.push_back(g);
    const CMor dense = circuit_matrix(c);
    const CMor expect = mtensor(qft(3), identity<ComplexField>(obj(2)));
    CHECK(discrepancy(dense, expect) <= 1e-12);
  }

  // QftBlock on a sub-range acts on the high bits only
  {
    Circuit c;
    c.n_controls = 3;
    c.target_dim = 1;
    Gate g;
    g.kind = Gate::Kind::QftBlock;
    g.qubits = {1, 2};
    c.gates.push_back(g);
    const CMor dense = circuit_matrix(c);
    const CMor expect = mtensor(qft(2), identity<ComplexField>(kTwo));
    CHECK(discrepancy(dense, expect) <= 1e-12);
  }

  // Swap relabels control bits, carrying the target register along
  {
    Circuit c;
    c.n_controls = 2;
    c.target_dim = 1;
    Gate g;
    g.kind = Gate::Kind::Swap;
    g.qubits = {0, 1};
    c.gates.push_back(g);
    const StateVec swapped = apply(c, StateVec::basis(2, 1, 1, 0));  // |a=1> -> |a=2>
    CHECK(std::abs(swapped.amps[2] - 1.0) < 1e-15);

    Circuit c3;
    c3.n_controls = 2;
    c3.target_dim = 3;
    c3.gates.push_back(g);
    const CMor expect = mtensor(perm_to_mor<ComplexField>(sigma_perm(kTwo, kTwo)),
                                identity<ComplexField>(obj(3)));
    CHECK(discrepancy(circuit_matrix(c3), expect) == 0.0);
  }

  // DenseBlock applies its payload to the target for every control value
  {
    std::mt19937_64 rng(19);
    const CMor u = random_unitary(obj(3), rng);
    Circuit c;
    c.n_controls = 2;
    c.target_dim = 3;
    c.bases.emplace_back(DenseBase{"U", u});
    Gate g;
    g.kind = Gate::Kind::DenseBlock;
    g.base_index = 0;
    c.gates.push_back(g);
    const CMor expect = mtensor(identity<ComplexField>(ObjExpr::qubits(2)), u);
    CHECK(discrepancy(circuit_matrix(c), expect) <= 1e-12);
  }

  // CtrlPower with a dense payload matches the stage construction
  {
    std::mt19937_64 rng(11);
    const CMor u = random_unitary(obj(3), rng);
    Circuit c;
    c.n_controls = 2;
    c.target_dim = 3;
    c.bases.emplace_back(DenseBase{"U", u});
    Gate g;
    g.kind = Gate::Kind::CtrlPower;
    g.qubits = {1};
    g.value = 1;
    g.power = 1;
    g.base_index = 0;
    c.gates.push_back(g);
    CHECK(discrepancy(circuit_matrix(c), stage(u, 1, 2)) <= 1e-12);
  }
}

TEST_CASE("oracle action on ancilla basis states") {
  // the efficient circuit acts as |a>|psi> -> |a> U^a |psi>, exhaustively
  CHECK(check_iterator_action(4, 5, 99, 1e-10).pass);
  CHECK(check_iterator_action(6, 8, 99, 1e-10).pass);
  CHECK(check_iterator_action(3, 1, 99, 1e-10).pass);
}

TEST_CASE("norm preservation and determinism of sampling") {
  std::mt19937_64 rng(13);
  const CMor u = random_unitary(obj(3), rng);
  Circuit c = efficient_iterator_circuit(u, 4);
  for (std::size_t q = 0; q < 4; ++q) {
    Gate h;
    h.kind = Gate::Kind::Hadamard;
    h.qubits = {q};
    c.gates.insert(c.gates.begin(), h);
  }
  const StateVec out = apply(c, StateVec::basis(4, 3, 0, 0));
  CHECK(std::abs(out.norm() - 1.0) <= 1e-12);

  // the norm holds after every single gate, not just at the end
  {
    StateVec step = StateVec::basis(4, 3, 0, 0);
    for (const Gate& g : c.gates) {
      Circuit single;
      single.n_controls = c.n_controls;
      single.target_dim = c.target_dim;
      single.bases = c.bases;
      single.gates = {g};
      step = apply(single, std::move(step));
      CHECK(std::abs(step.norm() - 1.0) <= 1e-12);
    }
  }

  // sampled frequencies track the marginal (fixed seed, generous bound)
  {
    const std::uint64_t shots = 20000;
    const auto counts = sample(out, Register::Controls, shots, 2718);
    const auto p = marginal(out, Register::Controls);
    for (std::size_t a = 0; a < p.size(); ++a) {
      const double expect = p[a] * static_cast<double>(shots);
      const double got = counts.count(a) ? static_cast<double>(counts.at(a)) : 0.0;
      const double sigma = std::sqrt(std::max(1.0, expect));
      CHECK(std::abs(got - expect) <= 6.0 * sigma + 3.0);
    }
  }

  const auto counts1 = sample(out, Register::Controls, 500, 77);
  const auto counts2 = sample(out, Register::Controls, 500, 77);
  CHECK(counts1 == counts2);
  std::uint64_t total = 0;
  for (const auto& [outcome, count] : counts1) total += count;
  CHECK(total == 500);

  // a basis state samples to a single outcome
  const auto point = sample(StateVec::basis(4, 3, 9, 1), Register::Controls, 100, 1);
  CHECK(point.size() == 1);
  CHECK(point.at(9) == 100);
  const auto target_point = sample(StateVec::basis(4, 3, 9, 1), Register::Target, 100, 1);
  CHECK(target_point.at(1) == 100);

  CHECK_THROWS_AS(sample(out, Register::Controls, 0, 1), std::invalid_argument);
}

TEST_CASE("iterator circuits") {
  std::mt19937_64 rng(17);
  const CMor u = random_unitary(obj(2), rng);

  const Circuit naive = naive_iterator_circuit(u, 3);
  CHECK(naive.gates.size() == 7);
  CHECK(naive.bases.size() == 7);
  const Circuit eff = efficient_iterator_circuit(u, 3);
  CHECK(eff.gates.size() == 3);
  CHECK(eff.gates[2].power == 4);

  // both simulate to the same dense operator as iterate_efficient
  const CMor expect = iterate_efficient(u, 3);
  CHECK(discrepancy(circuit_matrix(naive), expect) <= 1e-10);
  CHECK(discrepancy(circuit_matrix(eff), expect) <= 1e-10);

  // circuit JSON: stable field order and payload labels
  const Json j = to_json(eff);
  CHECK(j["n_controls"] == 3);
  CHECK(j["gates"].size() == 3);
  CHECK(j["gates"][0]["kind"] == "ctrlpower");
  CHECK(j["gates"][1]["matrix_ref"] == "U^2");
  CHECK(j["gates"][2]["power"] == 4);
  const std::string dumped = j.dump();
  CHECK(to_json(eff).dump() == dumped);
}
