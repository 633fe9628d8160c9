#include "distcat/suites.hpp"

#include <chrono>

#include "distcat/random.hpp"

namespace distcat {

std::vector<DiagramReport> run_iterator_suite(std::uint64_t root_seed, double tol,
                                              std::size_t n_max,
                                              const std::vector<std::size_t>& dims,
                                              std::size_t trials) {
  std::vector<DiagramReport> reports;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t dim : dims) {
      const ObjExpr x = dim == 1 ? ObjExpr::unit() : ObjExpr::atom("A", dim);
      for (std::size_t t = 0; t < trials; ++t) {
        auto rng = make_engine(root_seed, "iterator", (n * 97 + dim) * 1009 + t);
        reports.push_back(verify_equivalence(random_unitary(x, rng), n, tol));
        reports.push_back(
            verify_equivalence(random_perm_mor<BoolRig>(x, rng), n, tol));
      }
    }
  }
  return reports;
}

DiagramReport check_iterator_action(std::size_t n, std::size_t dim,
                                    std::uint64_t root_seed, double tol) {
  auto rng = make_engine(root_seed, "iterator-action");
  const CMor u = random_unitary(dim, rng);
  const Circuit circuit = efficient_iterator_circuit(u, n);

  // Random normalised target vector.
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::complex<double>> psi(dim);
  double norm = 0.0;
  for (auto& z : psi) {
    z = {gauss(rng), gauss(rng)};
    norm += std::norm(z);
  }
  norm = std::sqrt(norm);
  for (auto& z : psi) z /= norm;

  double worst = 0.0;
  const std::uint64_t n_ctrl = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < n_ctrl; ++a) {
    StateVec s;
    s.n_controls = n;
    s.target_dim = dim;
    s.amps.assign(n_ctrl * dim, {0.0, 0.0});
    for (std::size_t t = 0; t < dim; ++t) s.amps[a * dim + t] = psi[t];
    const StateVec out = apply(circuit, s);

    // Expected: |a> tensor u^a psi, the power applied one multiply at a time.
    std::vector<std::complex<double>> expected = psi;
    for (std::uint64_t applications = 0; applications < a; ++applications) {
      std::vector<std::complex<double>> next(dim, {0.0, 0.0});
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) next[i] += u.at(i, j) * expected[j];
      expected = next;
    }
    for (std::uint64_t b = 0; b < n_ctrl; ++b)
      for (std::size_t t = 0; t < dim; ++t) {
        const std::complex<double> want = b == a ? expected[t] : 0.0;
        worst = std::max(worst, std::abs(out.amps[b * dim + t] - want));
      }
  }
  return make_report("iterator-action",
                     "n=" + std::to_string(n) + " dim=" + std::to_string(dim), worst,
                     tol);
}

std::vector<DiagramReport> run_quantum_suite(std::uint64_t root_seed, double tol) {
  std::vector<DiagramReport> reports;
  reports.push_back(swap_decomposition_check());

  for (std::size_t n = 1; n <= 6; ++n) {
    const CMor f = qft(n);
    reports.push_back(make_report("qft-unitarity", "n=" + std::to_string(n),
                                  unitarity_defect(f), tol));
    reports.push_back(make_report(
        "qft-inverse", "n=" + std::to_string(n),
        discrepancy(compose(f, qft(n, true)), identity<ComplexField>(f.dom())), tol));
  }

  reports.push_back(check_iterator_action(4, 3, root_seed, tol));
  reports.push_back(check_iterator_action(5, 2, root_seed + 1, tol));

  // Norm drift under a mixed random circuit.
  {
    auto rng = make_engine(root_seed, "norm-drift");
    const std::size_t n = 5, d = 3;
    Circuit c;
    c.n_controls = n;
    c.target_dim = d;
    c.bases.emplace_back(DenseBase{"V", random_unitary(d, rng)});
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
    for (int i = 0; i < 200; ++i) {
      Gate g;
      switch (kind(rng)) {
        case 0:
          g.kind = Gate::Kind::Hadamard;
          g.qubits = {qubit(rng)};
          break;
        case 1:
          g.kind = Gate::Kind::Swap;
          g.qubits = {qubit(rng), qubit(rng)};
          break;
        case 2:
          g.kind = Gate::Kind::CtrlPower;
          g.qubits = {qubit(rng)};
          g.value = 1;
          g.power = 1;
          g.base_index = 0;
          break;
        default:
          g.kind = Gate::Kind::QftBlock;
          g.qubits = {0, 1, 2};
          g.inverse = false;
          break;
      }
      c.gates.push_back(g);
    }
    StateVec s = StateVec::basis(n, d, 0, 0);
    for (std::size_t q = 0; q < n; ++q) {
      Gate h;
      h.kind = Gate::Kind::Hadamard;
      h.qubits = {q};
      c.gates.insert(c.gates.begin(), h);
    }
    const StateVec out = apply(c, s);
    reports.push_back(make_report("norm-preservation", "205 gates, n=5 d=3",
                                  std::abs(out.norm() - 1.0), tol));
  }
  return reports;
}

double time_circuit_build(const CMor& u, std::size_t n, IteratorForm form,
                          double min_elapsed) {
  using clock = std::chrono::steady_clock;
  // Warm-up build, also keeps the result observable.
  volatile std::size_t sink = 0;
  auto build = [&]() {
    Circuit c = form == IteratorForm::Naive ? naive_iterator_circuit(u, n)
                                            : efficient_iterator_circuit(u, n);
    sink = sink + c.gates.size() + c.bases.size();
  };
  build();
  std::size_t reps = 0;
  const auto start = clock::now();
  double elapsed = 0.0;
  do {
    build();
    ++reps;
    elapsed = std::chrono::duration<double>(clock::now() - start).count();
  } while (elapsed < min_elapsed || reps < 3);
  return elapsed / static_cast<double>(reps);
}

std::vector<BenchRow> run_bench(std::size_t n_max, std::size_t time_max_n,
                                std::size_t dim, std::uint64_t seed) {
  auto rng = make_engine(seed, "bench");
  const CMor u = random_unitary(dim, rng);
  std::vector<BenchRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    BenchRow row;
    row.n = n;
    row.counts = gate_counts(n);
    if (n <= time_max_n) {
      row.naive_build_seconds = time_circuit_build(u, n, IteratorForm::Naive, 0.05);
      row.efficient_build_seconds =
          time_circuit_build(u, n, IteratorForm::Efficient, 0.05);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace distcat
