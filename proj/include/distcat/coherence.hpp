#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "distcat/mor.hpp"

namespace distcat {

// Result of evaluating one commuting diagram at a concrete instance.
struct DiagramReport {
  std::string diagram;
  std::string instance;
  double discrepancy = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline DiagramReport make_report(std::string diagram, std::string instance,
                                 double discrepancy, double tolerance) {
  DiagramReport r;
  r.diagram = std::move(diagram);
  r.instance = std::move(instance);
  r.discrepancy = discrepancy;
  r.tolerance = tolerance;
  r.pass = discrepancy <= tolerance;
  return r;
}

// The copying endofunctor: delta(f) = 1_2 (x) f.
template <Semiring S>
Mor<S> delta(const Mor<S>& f) {
  return mtensor(identity<S>(ObjExpr::two()), f);
}

namespace detail {

template <Semiring S>
std::string mor_instance(const Mor<S>& f) {
  return "f:" + f.dom().str() + "->" + f.cod().str() + " over " + S::name;
}

}  // namespace detail

// 2 (x) X is X + X:  dr . delta(f) . dr^{-1} == f + f.
template <Semiring S>
DiagramReport check_copy(const Mor<S>& f, double tol) {
  const Perm into = copy_perm(f.dom());
  const Perm outof = copy_perm(f.cod());
  Mor<S> lhs = compose(outof, compose(delta(f), invert(into)));
  Mor<S> rhs = dsum(f, f);
  return make_report("copy", detail::mor_instance(f), discrepancy(lhs, rhs),
                     S::exact ? 0.0 : tol);
}

// Naturality square of the diagonal isomorphism: its component at X is the
// same index map as copy_perm, so this is the square form of check_copy.
template <Semiring S>
DiagramReport check_diagonal_nat(const Mor<S>& f, double tol) {
  Mor<S> lhs = compose(copy_perm(f.cod()), delta(f));
  Mor<S> rhs = compose(dsum(f, f), copy_perm(f.dom()));
  return make_report("diagonal-naturality", detail::mor_instance(f),
                     discrepancy(lhs, rhs), S::exact ? 0.0 : tol);
}

// delta is additively monoidal but not multiplicatively:
//  (i)  dl_{2,A',B'} . delta(f+g) == (delta(f) + delta(g)) . dl_{2,A,B}
//  (ii) delta(A) (x) delta(B) and delta^2(A (x) B) are mediated by
//       1_2 (x) sigma_{A,2} (x) 1_B, naturally in f and g.
template <Semiring S>
DiagramReport check_monoidality(const ObjExpr& a, const ObjExpr& b, const Mor<S>& f,
                                const Mor<S>& g, double tol) {
  if (f.dom() != a || g.dom() != b)
    throw std::invalid_argument("check_monoidality: f, g must have domains A, B");
  const ObjExpr two = ObjExpr::two();

  Mor<S> lhs = compose(dl_perm(two, f.cod(), g.cod()), delta(dsum(f, g)));
  Mor<S> rhs = compose(dsum(delta(f), delta(g)), dl_perm(two, a, b));
  double worst = discrepancy(lhs, rhs);

  auto mediator = [&two](const ObjExpr& x, const ObjExpr& y) {
    return mtensor(identity_perm(two),
                   mtensor(sigma_perm(x, two), identity_perm(y)));
  };
  const Perm q_dom = mediator(a, b);
  const Perm q_cod = mediator(f.cod(), g.cod());
  if (q_dom.source() != ObjExpr::prod(ObjExpr::prod(two, a), ObjExpr::prod(two, b)) ||
      q_dom.target() != ObjExpr::prod(two, ObjExpr::prod(two, ObjExpr::prod(a, b))))
    worst = std::numeric_limits<double>::infinity();
  Mor<S> obs_lhs = compose(q_cod, mtensor(delta(f), delta(g)));
  Mor<S> obs_rhs = compose(delta(delta(mtensor(f, g))), q_dom);
  worst = std::max(worst, discrepancy(obs_lhs, obs_rhs));

  return make_report("delta-monoidality",
                     "A=" + a.str() + " B=" + b.str() + " over " + S::name, worst,
                     S::exact ? 0.0 : tol);
}

// The two coherence paths from 2 (x) A (x) (B+C) to the fully distributed
// four-fold sum, compared as raw index maps. The drawn bottom edge ends in
// the flattened sum, so the left path distributes A over all four summands.
DiagramReport check_deltasym(const ObjExpr& a, const ObjExpr& b, const ObjExpr& c);

// The naturality ladder: every square between the two columns commutes, with
// f: B -> Y and g: C -> Z arbitrary (possibly rectangular).
template <Semiring S>
DiagramReport check_naturality_fig1(const ObjExpr& a, const Mor<S>& f, const Mor<S>& g,
                                    double tol) {
  const ObjExpr two = ObjExpr::two();
  const ObjExpr b = f.dom(), y = f.cod();
  const ObjExpr c = g.dom(), z = g.cod();

  auto verticals = [&](const ObjExpr& p, const ObjExpr& q) {
    std::vector<Perm> v;
    v.push_back(mtensor(sigma_perm(two, a), identity_perm(ObjExpr::sum(p, q))));
    v.push_back(mtensor(identity_perm(a), dl_perm(two, p, q)));
    v.push_back(mtensor(identity_perm(a), dsum(copy_perm(p), copy_perm(q))));
    v.push_back(compose(dsum(dl_perm(a, p, p), dl_perm(a, q, q)),
                        dl_perm(a, ObjExpr::sum(p, p), ObjExpr::sum(q, q))));
    return v;
  };
  const std::vector<Perm> v_src = verticals(b, c);
  const std::vector<Perm> v_dst = verticals(y, z);

  const Mor<S> id2 = identity<S>(two);
  const Mor<S> ida = identity<S>(a);
  std::vector<Mor<S>> h;
  h.push_back(mtensor(id2, mtensor(ida, dsum(f, g))));
  h.push_back(mtensor(ida, mtensor(id2, dsum(f, g))));
  h.push_back(mtensor(ida, dsum(mtensor(id2, f), mtensor(id2, g))));
  h.push_back(mtensor(ida, dsum(f, dsum(f, dsum(g, g)))));
  h.push_back(dsum(mtensor(ida, f),
                   dsum(mtensor(ida, f), dsum(mtensor(ida, g), mtensor(ida, g)))));

  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    Mor<S> down_then_across = compose(h[k + 1], v_src[k]);
    Mor<S> across_then_down = compose(v_dst[k], h[k]);
    worst = std::max(worst, discrepancy(down_then_across, across_then_down));
  }
  // Whole-ladder composite both ways round.
  Perm left = v_src[0];
  Perm right = v_dst[0];
  for (std::size_t k = 1; k < 4; ++k) {
    left = compose(v_src[k], left);
    right = compose(v_dst[k], right);
  }
  worst = std::max(worst, discrepancy(compose(h[4], left), compose(right, h[0])));

  return make_report("naturality-ladder",
                     "A=" + a.str() + " f:" + b.str() + "->" + y.str() +
                         " g:" + c.str() + "->" + z.str() + " over " + S::name,
                     worst, S::exact ? 0.0 : tol);
}

// Every diagram above at `trials` random instances per semiring,
// dims <= 5, derived deterministically from `root_seed`.
std::vector<DiagramReport> run_coherence_suite(std::uint64_t root_seed,
                                               std::size_t trials, double tol);

}  // namespace distcat
