#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "distcat/json_io.hpp"
#include "distcat/random.hpp"

using namespace distcat;

namespace {

ObjExpr obj(std::size_t dim) {
  return dim == 1 ? ObjExpr::unit() : ObjExpr::atom("A", dim);
}

const ObjExpr kI = ObjExpr::unit();
const ObjExpr kTwo = ObjExpr::two();

CMor not_gate() { return perm_to_mor<ComplexField>(s_perm(kI, kI)); }

// k-fold composition the slow way, as the oracle for power().
template <Semiring S>
Mor<S> fold_power(const Mor<S>& f, std::size_t k) {
  Mor<S> acc = identity<S>(f.dom());
  for (std::size_t i = 0; i < k; ++i) acc = compose(f, acc);
  return acc;
}

}  // namespace

TEST_CASE("semiring laws on random elements") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> real(-2.0, 2.0);
  for (int t = 0; t < 200; ++t) {
    using C = ComplexField;
    const C::Scalar a{real(rng), real(rng)}, b{real(rng), real(rng)}, c{real(rng), real(rng)};
    CHECK(C::diff_norm(C::add(C::add(a, b), c), C::add(a, C::add(b, c))) < 1e-12);
    CHECK(C::diff_norm(C::mul(C::mul(a, b), c), C::mul(a, C::mul(b, c))) < 1e-12);
    CHECK(C::diff_norm(C::mul(a, C::add(b, c)), C::add(C::mul(a, b), C::mul(a, c))) < 1e-12);
    CHECK(C::is_zero(C::mul(C::zero(), a)));
    CHECK(C::diff_norm(C::mul(C::one(), a), a) == 0.0);

    using B = BoolRig;
    std::uniform_int_distribution<int> bit(0, 1);
    const B::Scalar x = bit(rng), y = bit(rng), z = bit(rng);
    CHECK(B::add(B::add(x, y), z) == B::add(x, B::add(y, z)));
    CHECK(B::mul(x, B::add(y, z)) == B::add(B::mul(x, y), B::mul(x, z)));
    CHECK(B::mul(B::zero(), x) == B::zero());
    CHECK(B::mul(B::one(), x) == x);
    CHECK(B::add(x, x) == x);  // idempotent, no subtraction available
  }
}

TEST_CASE("compose and identity") {
  std::mt19937_64 rng(5);
  const CMor f = random_complex(obj(3), obj(4), rng);
  CHECK(discrepancy(compose(identity<ComplexField>(obj(4)), f), f) == 0.0);
  CHECK(discrepancy(compose(f, identity<ComplexField>(obj(3))), f) == 0.0);

  const Perm p = sigma_perm(obj(2), obj(3));
  CHECK(discrepancy(compose(perm_to_mor<ComplexField>(p), perm_to_mor<ComplexField>(invert(p))),
                    identity<ComplexField>(p.target())) == 0.0);

  // boolean 2x2 product by hand: [[1,0],[1,1]] . [[0,1],[1,0]] = [[0,1],[1,1]]
  BMor a(obj(2), obj(2), {1, 0, 1, 1});
  BMor b(obj(2), obj(2), {0, 1, 1, 0});
  BMor expect(obj(2), obj(2), {0, 1, 1, 1});
  CHECK(discrepancy(compose(a, b), expect) == 0.0);

  CHECK_THROWS_AS(compose(a, BMor(obj(2), obj(3))), std::invalid_argument);
}

TEST_CASE("mtensor") {
  std::mt19937_64 rng(7);
  const CMor f = random_complex(obj(3), obj(3), rng);
  CHECK(discrepancy(mtensor(identity<ComplexField>(kI), f), f) == 0.0);
  CHECK(discrepancy(mtensor(f, identity<ComplexField>(kI)), f) == 0.0);

  // NOT (x) NOT is the reversal permutation on 4 points
  const CMor nn = mtensor(not_gate(), not_gate());
  const Perm reversal(ObjExpr::prod(kTwo, kTwo), ObjExpr::prod(kTwo, kTwo), {3, 2, 1, 0});
  CHECK(discrepancy(nn, perm_to_mor<ComplexField>(reversal)) == 0.0);

  for (int t = 0; t < 50; ++t) {
    const CMor g = random_complex(obj(2), obj(2), rng);
    const CMor h = random_complex(obj(2), obj(2), rng);
    const CMor k = random_complex(obj(2), obj(2), rng);
    const CMor f2 = random_complex(obj(2), obj(2), rng);
    CHECK(discrepancy(mtensor(compose(f2, g), compose(h, k)),
                      compose(mtensor(f2, h), mtensor(g, k))) < 1e-12);
  }
}

TEST_CASE("dsum") {
  CMor u(kI, kI, {std::complex<double>(0.7, 0.1)});
  const CMor d = dsum(u, identity<ComplexField>(kI));
  CHECK(d.rows() == 2);
  CHECK(std::abs(d.at(0, 0) - std::complex<double>(0.7, 0.1)) == 0.0);
  CHECK(d.at(1, 1) == std::complex<double>(1.0, 0.0));
  CHECK(d.at(0, 1) == std::complex<double>(0.0, 0.0));

  // zero-dimensional summand is the unit
  const CMor zero_block(ObjExpr::zero(), ObjExpr::zero());
  std::mt19937_64 rng(11);
  const CMor f = random_complex(obj(3), obj(3), rng);
  CHECK(discrepancy(dsum(zero_block, f), f) == 0.0);
  CHECK(discrepancy(dsum(f, zero_block), f) == 0.0);
}

TEST_CASE("interchange of composition with the tensors") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const CMor f = random_complex(obj(2), obj(3), rng);
    const CMor g = random_complex(obj(4), obj(2), rng);
    const CMor h = random_complex(obj(3), obj(2), rng);
    const CMor k = random_complex(obj(2), obj(3), rng);
    CHECK(discrepancy(dsum(compose(f, g), compose(h, k)),
                      compose(dsum(f, h), dsum(g, k))) < 1e-12);

    const BMor bf = random_bool(obj(2), obj(3), rng);
    const BMor bg = random_bool(obj(4), obj(2), rng);
    const BMor bh = random_bool(obj(3), obj(2), rng);
    const BMor bk = random_bool(obj(2), obj(3), rng);
    CHECK(discrepancy(dsum(compose(bf, bg), compose(bh, bk)),
                      compose(dsum(bf, bh), dsum(bg, bk))) == 0.0);
    CHECK(discrepancy(mtensor(compose(bf, bg), compose(bh, bk)),
                      compose(mtensor(bf, bh), mtensor(bg, bk))) == 0.0);
  }
}

TEST_CASE("perm_to_mor") {
  CHECK(discrepancy(perm_to_mor<ComplexField>(identity_perm(obj(5))),
                    identity<ComplexField>(obj(5))) == 0.0);

  const CMor n = not_gate();
  CHECK(n.at(0, 1) == std::complex<double>(1.0, 0.0));
  CHECK(n.at(1, 0) == std::complex<double>(1.0, 0.0));
  CHECK(n.at(0, 0) == std::complex<double>(0.0, 0.0));

  // the perfect shuffle on two qubits is the SWAP matrix
  const CMor swap = perm_to_mor<ComplexField>(sigma_perm(kTwo, kTwo));
  for (std::size_t j = 0; j < 4; ++j) {
    const std::size_t image[] = {0, 2, 1, 3};
    CHECK(swap.at(image[j], j) == std::complex<double>(1.0, 0.0));
  }
}

TEST_CASE("power") {
  std::mt19937_64 rng(17);
  const CMor f = random_complex(obj(3), obj(3), rng);
  CHECK(discrepancy(power(f, 0), identity<ComplexField>(obj(3))) == 0.0);
  CHECK(discrepancy(power(not_gate(), 2), identity<ComplexField>(kTwo)) == 0.0);
  CHECK(discrepancy(power(f, 5), fold_power(f, 5)) < 1e-10);
  CHECK(discrepancy(power(f, 1), f) == 0.0);
  CHECK_THROWS_AS(power(random_complex(obj(2), obj(3), rng), 2), std::invalid_argument);

  const BMor bf = random_bool(obj(4), obj(4), rng);
  CHECK(discrepancy(power(bf, 6), fold_power(bf, 6)) == 0.0);
}

TEST_CASE("naturality of dl on morphisms") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<std::size_t> d(1, 4);
  for (int t = 0; t < 40; ++t) {
    const ObjExpr a1 = obj(d(rng)), a2 = obj(d(rng));
    const ObjExpr b1 = obj(d(rng)), b2 = obj(d(rng));
    const ObjExpr c1 = obj(d(rng)), c2 = obj(d(rng));
    const CMor f = random_complex(a1, a2, rng);
    const CMor g = random_complex(b1, b2, rng);
    const CMor h = random_complex(c1, c2, rng);
    const CMor lhs = compose(dl_perm(a2, b2, c2), mtensor(f, dsum(g, h)));
    const CMor rhs = compose(dsum(mtensor(f, g), mtensor(f, h)), dl_perm(a1, b1, c1));
    CHECK(discrepancy(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("unitarity is preserved") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const CMor u = random_unitary(3, rng);
    const CMor v = random_unitary(2, rng);
    CHECK(unitarity_defect(u) <= 1e-10);
    CHECK(unitarity_defect(mtensor(u, v)) <= 1e-10);
    CHECK(unitarity_defect(dsum(u, v)) <= 1e-10);
  }
  CHECK(unitarity_defect(perm_to_mor<ComplexField>(sigma_perm(obj(3), obj(4)))) == 0.0);
}

TEST_CASE("matrix json") {
  CMor u(kI, kI, {std::complex<double>(0.5, -0.25)});
  const Json j = to_json(dsum(u, identity<ComplexField>(kI)));
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 2);
  CHECK(j["dom"] == "2");
  CHECK(j["entries"][0][0] == 0.5);
  CHECK(j["entries"][0][1] == -0.25);

  BMor b(obj(2), obj(2), {1, 0, 0, 1});
  CHECK(to_json(b)["entries"] == Json::array({1, 0, 0, 1}));
}
