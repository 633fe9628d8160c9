#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "distcat/json_io.hpp"
#include "distcat/random.hpp"
#include "distcat/suites.hpp"

namespace {

using namespace distcat;

constexpr std::uint64_t kDefaultSeed = 42;

struct GlobalOpts {
  std::uint64_t seed = kDefaultSeed;
  double tolerance = 1e-10;
  std::string format = "text";
  std::string out;
};

// Writes to --out when given, stdout otherwise. Returns false when the
// path cannot be opened.
bool emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) {
    std::cerr << "cannot write to " << g.out << "\n";
    return false;
  }
  file << text;
  return static_cast<bool>(file);
}

std::string render_reports(const std::vector<DiagramReport>& reports,
                           const std::string& format) {
  std::string text;
  for (const auto& r : reports) {
    if (format == "json") {
      text += to_json(r).dump();
      text += '\n';
    } else {
      char line[512];
      std::snprintf(line, sizeof line, "%s  %-22s  %-48s  discrepancy=%.3g\n",
                    r.pass ? "PASS" : "FAIL", r.diagram.c_str(), r.instance.c_str(),
                    r.discrepancy);
      text += line;
    }
  }
  return text;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, std::size_t trials,
               std::size_t n_opt, std::size_t dim_opt) {
  std::vector<DiagramReport> reports;
  if (suite == "coherence" || suite == "all") {
    auto r = run_coherence_suite(g.seed, trials, g.tolerance);
    reports.insert(reports.end(), r.begin(), r.end());
  }
  if (suite == "iterator" || suite == "all") {
    const std::size_t n_max = n_opt ? n_opt : 5;
    const std::vector<std::size_t> dims =
        dim_opt ? std::vector<std::size_t>{dim_opt} : std::vector<std::size_t>{2, 3};
    const std::size_t per_combo = std::max<std::size_t>(1, trials / 10);
    auto r = run_iterator_suite(g.seed, g.tolerance, n_max, dims, per_combo);
    reports.insert(reports.end(), r.begin(), r.end());
  }
  if (suite == "quantum" || suite == "all") {
    auto r = run_quantum_suite(g.seed, g.tolerance);
    reports.insert(reports.end(), r.begin(), r.end());
  }
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  if (!emit(g, render_reports(reports, g.format))) return 1;
  return all_pass ? 0 : 1;
}

int cmd_bench(const GlobalOpts& g, std::size_t n_max, std::size_t time_max_n,
              std::size_t dim) {
  const auto rows = run_bench(n_max, time_max_n, dim, g.seed);
  std::string text;
  if (g.format == "json") {
    for (const auto& row : rows) {
      Json j{{"n", row.n},
             {"naive_gates", row.counts.naive},
             {"efficient_gates", row.counts.efficient}};
      if (row.naive_build_seconds >= 0) {
        j["naive_build_seconds"] = row.naive_build_seconds;
        j["efficient_build_seconds"] = row.efficient_build_seconds;
      }
      text += j.dump();
      text += '\n';
    }
  } else {
    text = "  n  naive-gates  efficient-gates  naive-build[s]  efficient-build[s]\n";
    for (const auto& row : rows) {
      char line[256];
      if (row.naive_build_seconds >= 0)
        std::snprintf(line, sizeof line, "%3zu  %11llu  %15llu  %14.3g  %18.3g\n", row.n,
                      static_cast<unsigned long long>(row.counts.naive),
                      static_cast<unsigned long long>(row.counts.efficient),
                      row.naive_build_seconds, row.efficient_build_seconds);
      else
        std::snprintf(line, sizeof line, "%3zu  %11llu  %15llu  %14s  %18s\n", row.n,
                      static_cast<unsigned long long>(row.counts.naive),
                      static_cast<unsigned long long>(row.counts.efficient), "-", "-");
      text += line;
    }
  }
  return emit(g, text) ? 0 : 1;
}

int cmd_export(const GlobalOpts& g, const std::string& kind, std::size_t n,
               std::size_t dim, std::uint64_t base, std::uint64_t modulus) {
  Circuit c;
  if (kind == "shor-oracle") {
    c = shor::oracle(base, modulus, n, shor::target_qubits(modulus));
  } else {
    auto rng = make_engine(g.seed, "export-unitary");
    const CMor u = random_unitary(dim, rng);
    c = kind == "naive" ? naive_iterator_circuit(u, n) : efficient_iterator_circuit(u, n);
  }
  return emit(g, to_json(c).dump(2) + "\n") ? 0 : 1;
}

int cmd_iterate(const GlobalOpts& g, std::size_t n, std::size_t dim,
                const std::string& obj_text, const std::string& form_name,
                const std::string& export_path) {
  const ObjExpr x = obj_text.empty()
                        ? (dim == 1 ? ObjExpr::unit() : ObjExpr::atom("A", dim))
                        : ObjExpr::parse(obj_text);
  auto rng = make_engine(g.seed, "iterate-unitary");
  const CMor u = random_unitary(x, rng);
  dim = x.dim();
  const IteratorForm form =
      form_name == "naive" ? IteratorForm::Naive : IteratorForm::Efficient;
  const auto build = build_iterator(u, n, form);

  Json summary{{"form", form_name},
               {"n", n},
               {"dim", dim},
               {"stage_count", build.stage_count},
               {"result_dim", build.result.rows()},
               {"result_dom", build.result.dom().str()}};
  if (!export_path.empty()) {
    Circuit c = form == IteratorForm::Naive ? naive_iterator_circuit(u, n)
                                            : efficient_iterator_circuit(u, n);
    std::ofstream file(export_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write to " << export_path << "\n";
      return 1;
    }
    file << to_json(c).dump(2) << "\n";
    summary["exported"] = export_path;
  }
  return emit(g, summary.dump(2) + "\n") ? 0 : 1;
}

int cmd_factor(const GlobalOpts& g, std::uint64_t modulus, std::uint64_t base,
               std::size_t controls, std::uint64_t shots, std::size_t max_attempts,
               bool as_json, bool inverse_qft) {
  std::optional<std::uint64_t> fixed;
  if (base != 0) fixed = base;
  const shor::FactorRun run =
      shor::factor(modulus, controls, shots, g.seed, max_attempts, fixed, inverse_qft);
  std::string text;
  if (as_json || g.format == "json") {
    text = to_json(run).dump(2) + "\n";
  } else if (run.factors) {
    text = std::to_string(run.modulus) + " = " + std::to_string(run.factors->first) +
           " * " + std::to_string(run.factors->second) + "  (base " +
           std::to_string(run.base) + ", " + std::to_string(run.attempts) +
           " attempt(s))\n";
  } else {
    text = "no nontrivial factor of " + std::to_string(run.modulus) +
           " found: " + run.note + "\n";
  }
  if (!emit(g, text)) return 1;
  return run.factors ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "strongly distributive matrix categories, iterator oracles, and "
      "desk-scale factoring"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "root seed for all derived randomness");
  app.add_option("--tolerance", g.tolerance, "numeric tolerance for complex checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", g.out, "write output to this path instead of stdout");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  std::string suite;
  std::size_t trials = 50, v_n = 0, v_dim = 0;
  verify->add_option("suite", suite, "coherence | iterator | quantum | all")
      ->required()
      ->check(CLI::IsMember({"coherence", "iterator", "quantum", "all"}));
  verify->add_option("--trials", trials, "random instances per diagram");
  verify->add_option("--n", v_n, "restrict the iterator suite to this control count");
  verify->add_option("--dim", v_dim, "restrict the iterator suite to this target dim");

  auto* bench = app.add_subcommand("bench", "gate counts and circuit build times");
  bench->fallthrough();
  std::size_t n_max = 10, time_max_n = 10, b_dim = 2;
  bench->add_option("--n-max", n_max, "largest control count")->check(CLI::PositiveNumber);
  bench->add_option("--time-max-n", time_max_n, "time builds up to this n");
  bench->add_option("--dim", b_dim, "target dimension")->check(CLI::PositiveNumber);

  auto* exp = app.add_subcommand("export", "serialise a circuit as JSON");
  exp->fallthrough();
  std::string kind;
  std::size_t e_n = 4, e_dim = 2;
  std::uint64_t e_r = 7, e_k = 15;
  exp->add_option("kind", kind, "naive | efficient | shor-oracle")
      ->required()
      ->check(CLI::IsMember({"naive", "efficient", "shor-oracle"}));
  exp->add_option("--n", e_n, "control qubits")->check(CLI::PositiveNumber);
  exp->add_option("--dim", e_dim, "target dimension (naive/efficient)");
  exp->add_option("--r", e_r, "oracle base (shor-oracle)");
  exp->add_option("--K", e_k, "oracle modulus (shor-oracle)");

  auto* iter = app.add_subcommand("iterate", "build an iterator and report on it");
  iter->fallthrough();
  std::size_t i_n = 3, i_dim = 2;
  std::string form = "efficient", export_path, obj_text;
  iter->add_option("--n", i_n, "control qubits")->check(CLI::PositiveNumber);
  iter->add_option("--dim", i_dim, "target dimension")->check(CLI::PositiveNumber);
  iter->add_option("--obj", obj_text,
                   "target object expression, e.g. \"(2*A3)\"; overrides --dim");
  iter->add_option("--form", form, "naive | efficient")
      ->check(CLI::IsMember({"naive", "efficient"}));
  iter->add_option("--export", export_path, "also write the circuit JSON here");

  auto* fact = app.add_subcommand("factor", "period-finding factorisation");
  fact->fallthrough();
  std::uint64_t f_k = 0, f_base = 0, f_shots = 64;
  std::size_t f_controls = 0, f_attempts = 8;
  bool f_json = false, f_inverse = false;
  fact->add_option("--K", f_k, "modulus to factor")->required();
  fact->add_option("--base", f_base, "fixed base instead of random draws");
  fact->add_option("--controls", f_controls,
                   "control-register width (0 = 2*ceil(log2 K))");
  fact->add_option("--shots", f_shots, "measurement shots per attempt")
      ->check(CLI::PositiveNumber);
  fact->add_option("--max-attempts", f_attempts, "base draws before giving up");
  fact->add_flag("--json", f_json, "emit the FactorRun as JSON");
  fact->add_flag("--inverse-qft", f_inverse,
                 "conjugate with the inverse transform instead of the forward one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(g, suite, trials, v_n, v_dim);
    if (*bench) return cmd_bench(g, n_max, time_max_n, b_dim);
    if (*exp) return cmd_export(g, kind, e_n, e_dim, e_r, e_k);
    if (*iter) return cmd_iterate(g, i_n, i_dim, obj_text, form, export_path);
    if (*fact) {
      if (f_k < 2) {
        std::cerr << "factor: --K must be at least 2\n";
        return 2;
      }
      return cmd_factor(g, f_k, f_base, f_controls, f_shots, f_attempts, f_json,
                        f_inverse);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
