#include "distcat/random.hpp"

namespace distcat {

CMor random_complex(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ObjExpr dom = cols == 1 ? ObjExpr::unit() : ObjExpr::atom("A", cols);
  ObjExpr cod = rows == 1 ? ObjExpr::unit() : ObjExpr::atom("A", rows);
  CMor m(dom, cod);
  for (auto& e : m.entries()) e = {gauss(rng), gauss(rng)};
  return m;
}

CMor random_unitary(std::size_t dim, std::mt19937_64& rng) {
  CMor m = random_complex(dim, dim, rng);
  // Modified Gram-Schmidt on columns, run twice.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        std::complex<double> dot = 0.0;
        for (std::size_t i = 0; i < dim; ++i) dot += std::conj(m.at(i, k)) * m.at(i, j);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) -= dot * m.at(i, k);
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < dim; ++i) norm += std::norm(m.at(i, j));
      norm = std::sqrt(norm);
      for (std::size_t i = 0; i < dim; ++i) m.at(i, j) /= norm;
    }
  }
  return m;
}

BMor random_bool(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                 double density) {
  std::bernoulli_distribution bit(density);
  ObjExpr dom = cols == 1 ? ObjExpr::unit() : ObjExpr::atom("A", cols);
  ObjExpr cod = rows == 1 ? ObjExpr::unit() : ObjExpr::atom("A", rows);
  BMor m(dom, cod);
  for (auto& e : m.entries()) e = bit(rng) ? 1 : 0;
  return m;
}

CMor random_unitary(const ObjExpr& x, std::mt19937_64& rng) {
  CMor m = random_unitary(x.dim(), rng);
  return CMor(x, x, {m.entries().begin(), m.entries().end()});
}

CMor random_complex(const ObjExpr& dom, const ObjExpr& cod, std::mt19937_64& rng) {
  CMor m = random_complex(cod.dim(), dom.dim(), rng);
  return CMor(dom, cod, {m.entries().begin(), m.entries().end()});
}

BMor random_bool(const ObjExpr& dom, const ObjExpr& cod, std::mt19937_64& rng,
                 double density) {
  BMor m = random_bool(cod.dim(), dom.dim(), rng, density);
  return BMor(dom, cod, {m.entries().begin(), m.entries().end()});
}

}  // namespace distcat
