#include "distcat/coherence.hpp"

#include "distcat/random.hpp"

namespace distcat {

DiagramReport check_deltasym(const ObjExpr& a, const ObjExpr& b, const ObjExpr& c) {
  const ObjExpr two = ObjExpr::two();
  const ObjExpr bc = ObjExpr::sum(b, c);

  // left: sigma ; 1 (x) dl ; 1 (x) (dr + dr) ; full left distribution
  Perm left = mtensor(sigma_perm(two, a), identity_perm(bc));
  left = compose(mtensor(identity_perm(a), dl_perm(two, b, c)), left);
  left = compose(mtensor(identity_perm(a), dsum(copy_perm(b), copy_perm(c))), left);
  left = compose(dl_perm(a, ObjExpr::sum(b, b), ObjExpr::sum(c, c)), left);
  left = compose(dsum(dl_perm(a, b, b), dl_perm(a, c, c)), left);

  // right: 1 (x) dl ; dr ; 1 + s + 1
  const ObjExpr ab = ObjExpr::prod(a, b);
  const ObjExpr ac = ObjExpr::prod(a, c);
  Perm right = mtensor(identity_perm(two), dl_perm(a, b, c));
  right = compose(copy_perm(ObjExpr::sum(ab, ac)), right);
  right = compose(dsum(identity_perm(ab), dsum(s_perm(ac, ab), identity_perm(ac))), right);

  double mismatches = 0.0;
  if (left.source() != right.source() || left.target() != right.target()) {
    mismatches = std::numeric_limits<double>::infinity();
  } else {
    for (std::size_t i = 0; i < left.size(); ++i)
      if (left.apply(i) != right.apply(i)) mismatches += 1.0;
  }
  return make_report("delta-symmetry",
                     "A=" + a.str() + " B=" + b.str() + " C=" + c.str(), mismatches,
                     0.0);
}

namespace {

ObjExpr rand_obj(std::mt19937_64& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> d(1, max_dim);
  std::size_t dim = d(rng);
  if (dim == 1) return ObjExpr::unit();
  if (dim == 2 && std::uniform_int_distribution<int>(0, 1)(rng) == 0)
    return ObjExpr::two();
  return ObjExpr::atom("A", dim);
}

}  // namespace

std::vector<DiagramReport> run_coherence_suite(std::uint64_t root_seed,
                                               std::size_t trials, double tol) {
  std::vector<DiagramReport> reports;
  reports.reserve(trials * 9);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = make_engine(root_seed, "coherence", t);
    const ObjExpr a = rand_obj(rng, 5);
    const ObjExpr b = rand_obj(rng, 5);
    const ObjExpr c = rand_obj(rng, 5);
    const ObjExpr x = rand_obj(rng, 5);

    reports.push_back(check_copy(random_unitary(x, rng), tol));
    reports.push_back(check_diagonal_nat(random_unitary(x, rng), tol));
    reports.push_back(check_copy(random_bool(x, x, rng), tol));
    reports.push_back(check_diagonal_nat(random_bool(x, x, rng), tol));

    reports.push_back(check_monoidality(a, b, random_unitary(a, rng),
                                        random_unitary(b, rng), tol));
    reports.push_back(check_monoidality(a, b, random_bool(a, a, rng),
                                        random_bool(b, b, rng), tol));

    reports.push_back(check_deltasym(a, b, c));

    {
      const ObjExpr yy = rand_obj(rng, 5);
      const ObjExpr zz = rand_obj(rng, 5);
      reports.push_back(check_naturality_fig1(
          a, random_complex(b, yy, rng), random_complex(c, zz, rng), tol));
      reports.push_back(check_naturality_fig1(a, random_bool(b, yy, rng),
                                              random_bool(c, zz, rng), tol));
    }
  }
  return reports;
}

}  // namespace distcat
