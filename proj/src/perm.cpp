#include "distcat/perm.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace distcat {

Perm::Perm(ObjExpr source, ObjExpr target, std::vector<std::size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (source_.dim() != target_.dim())
    throw std::invalid_argument("Perm: source and target dimensions differ");
  if (map_.size() != source_.dim())
    throw std::invalid_argument("Perm: map length does not match dimension");
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t v : map_) {
    if (v >= map_.size() || seen[v])
      throw std::invalid_argument("Perm: map is not a bijection");
    seen[v] = true;
  }
}

bool Perm::is_identity_map() const noexcept {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != i) return false;
  return true;
}

bool Perm::operator==(const Perm& other) const noexcept {
  return source_ == other.source_ && target_ == other.target_ && map_ == other.map_;
}

Perm identity_perm(const ObjExpr& x) {
  std::vector<std::size_t> map(x.dim());
  std::iota(map.begin(), map.end(), std::size_t{0});
  return Perm(x, x, std::move(map));
}

Perm dl_perm(const ObjExpr& a, const ObjExpr& b, const ObjExpr& c) {
  const std::size_t da = a.dim(), db = b.dim(), dc = c.dim();
  ObjExpr source = ObjExpr::prod(a, ObjExpr::sum(b, c));
  ObjExpr target = ObjExpr::sum(ObjExpr::prod(a, b), ObjExpr::prod(a, c));
  std::vector<std::size_t> map(da * (db + dc));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t s = 0; s < db + dc; ++s)
      map[i * (db + dc) + s] =
          s < db ? i * db + s : da * db + i * dc + (s - db);
  return Perm(std::move(source), std::move(target), std::move(map));
}

Perm dr_perm(const ObjExpr& x, const ObjExpr& y, const ObjExpr& z) {
  ObjExpr source = ObjExpr::prod(ObjExpr::sum(x, y), z);
  ObjExpr target = ObjExpr::sum(ObjExpr::prod(x, z), ObjExpr::prod(y, z));
  // Lexicographic bases agree block for block: the index map is the identity.
  std::vector<std::size_t> map(source.dim());
  std::iota(map.begin(), map.end(), std::size_t{0});
  return Perm(std::move(source), std::move(target), std::move(map));
}

Perm sigma_perm(const ObjExpr& x, const ObjExpr& y) {
  const std::size_t dx = x.dim(), dy = y.dim();
  std::vector<std::size_t> map(dx * dy);
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dy; ++j) map[i * dy + j] = j * dx + i;
  return Perm(ObjExpr::prod(x, y), ObjExpr::prod(y, x), std::move(map));
}

Perm s_perm(const ObjExpr& a, const ObjExpr& b) {
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<std::size_t> map(da + db);
  for (std::size_t i = 0; i < da; ++i) map[i] = db + i;
  for (std::size_t i = 0; i < db; ++i) map[da + i] = i;
  return Perm(ObjExpr::sum(a, b), ObjExpr::sum(b, a), std::move(map));
}

Perm copy_perm(const ObjExpr& x) {
  return dr_perm(ObjExpr::unit(), ObjExpr::unit(), x);
}

Perm lambda_perm(std::size_t n, const ObjExpr& x) {
  if (n == 0) throw std::invalid_argument("lambda_perm: n must be at least 1");
  if (n == 1) return copy_perm(x);
  Perm inner = lambda_perm(n - 1, x);
  ObjExpr half = ObjExpr::sum_pow(x, std::size_t{1} << (n - 1));
  return compose(copy_perm(half),
                 mtensor(identity_perm(ObjExpr::two()), inner));
}

Perm invert(const Perm& p) {
  std::vector<std::size_t> map(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) map[p.apply(i)] = i;
  return Perm(p.target(), p.source(), std::move(map));
}

Perm compose(const Perm& p, const Perm& q) {
  if (q.target() != p.source())
    throw std::invalid_argument("compose(Perm): target of q differs from source of p");
  std::vector<std::size_t> map(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) map[i] = p.apply(q.apply(i));
  return Perm(q.source(), p.target(), std::move(map));
}

Perm mtensor(const Perm& p, const Perm& q) {
  const std::size_t dq = q.size();
  std::vector<std::size_t> map(p.size() * dq);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < dq; ++j)
      map[i * dq + j] = p.apply(i) * dq + q.apply(j);
  return Perm(ObjExpr::prod(p.source(), q.source()),
              ObjExpr::prod(p.target(), q.target()), std::move(map));
}

Perm dsum(const Perm& p, const Perm& q) {
  std::vector<std::size_t> map(p.size() + q.size());
  for (std::size_t i = 0; i < p.size(); ++i) map[i] = p.apply(i);
  for (std::size_t j = 0; j < q.size(); ++j) map[p.size() + j] = p.size() + q.apply(j);
  return Perm(ObjExpr::sum(p.source(), q.source()),
              ObjExpr::sum(p.target(), q.target()), std::move(map));
}

}  // namespace distcat
