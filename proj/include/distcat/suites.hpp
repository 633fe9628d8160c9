#pragma once

#include <cstdint>
#include <vector>

#include "distcat/iterator.hpp"

namespace distcat {

// Iterator-equivalence reports over n = 1..n_max and the given target
// dimensions: complex random unitaries plus boolean random permutations.
std::vector<DiagramReport> run_iterator_suite(std::uint64_t root_seed, double tol,
                                              std::size_t n_max,
                                              const std::vector<std::size_t>& dims,
                                              std::size_t trials);

// Swap decomposition, QFT unitarity, the |a>|psi> -> |a>U^a|psi> action of
// the efficient oracle, and norm preservation under random circuits.
std::vector<DiagramReport> run_quantum_suite(std::uint64_t root_seed, double tol);

// Exhaustive basis check of the oracle action at one instance.
DiagramReport check_iterator_action(std::size_t n, std::size_t dim,
                                    std::uint64_t root_seed, double tol);

struct BenchRow {
  std::size_t n = 0;
  GateCounts counts;
  // Mean wall-clock seconds per circuit build; negative when not timed.
  double naive_build_seconds = -1.0;
  double efficient_build_seconds = -1.0;
};

// Mean seconds per build, repeating until min_elapsed has accumulated.
double time_circuit_build(const CMor& u, std::size_t n, IteratorForm form,
                          double min_elapsed);

// Gate counts for n = 1..n_max; build timings up to time_max_n.
std::vector<BenchRow> run_bench(std::size_t n_max, std::size_t time_max_n,
                                std::size_t dim, std::uint64_t seed);

}  // namespace distcat
