#include "coxrep/reference.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace coxrep::reference {

UnfoldedQuiver unfold(const CoxeterQuiver& q) {
  const auto labels = q.labels();
  const auto irr = irr_enumerate(labels);
  const auto nv = q.vertex_count();
  std::vector<std::vector<UnfoldedArrow>> per_arrow;
  for (const auto& a : q.arrows()) {
    const auto weight = FusionElem::tlj_simple(labels, a.label, a.label - 3);
    std::vector<UnfoldedArrow> list;
    for (std::size_t b = 0; b < irr.size(); ++b) {
      const auto product = weight * FusionElem::simple(irr[b]);
      for (std::size_t c = 0; c < irr.size(); ++c) {
        const auto mult = product.coefficient(irr[c]);
        for (mpz_class m = 0; m < mult; ++m) {
          list.push_back(UnfoldedArrow{0, b * nv + q.position(a.source), c * nv + q.position(a.target), a.id});
        }
      }
    }
    per_arrow.push_back(std::move(list));
  }
  return make_unfolded(q, std::move(per_arrow));
}

RootSet root_orbit(const RootSystem& rs, std::size_t budget) {
  std::map<std::string, RootVector> seen;
  std::deque<RootVector> queue;
  for (int v : rs.vertices()) {
    auto e = rs.simple_root(v);
    seen.emplace(e.serialize(), e);
    queue.push_back(std::move(e));
  }
  bool closed = true;
  while (!queue.empty() && closed) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (int v : rs.vertices()) {
      auto image = rs.reflect(v, cur);
      auto key = image.serialize();
      if (seen.contains(key)) continue;
      seen.emplace(std::move(key), image);
      queue.push_back(std::move(image));
      if (seen.size() > budget) {
        closed = false;
        break;
      }
    }
  }
  RootSet out;
  out.closed = closed;
  for (auto& [key, r] : seen) out.roots.push_back(r);
  if (!closed) throw OrbitBudgetExceeded("root orbit exceeds budget", out);
  return out;
}

RootSet positive_roots(const RootSystem& rs, std::size_t budget) {
  // Group by the least serialized multiple over all units, then take the
  // least member of each group.
  const auto units = invertible_simples(rs.labels());
  std::map<std::string, std::string> best;
  std::map<std::string, RootVector> by_key;
  for (const auto& r : root_orbit(rs, budget).roots) {
    if (!is_positive_vec(r)) continue;
    std::string cls = r.serialize();
    for (const auto& g : units) cls = std::min(cls, r.scaled(FusionElem::simple(g)).serialize());
    const auto key = r.serialize();
    auto [it, fresh] = best.emplace(cls, key);
    if (!fresh && key < it->second) it->second = key;
    by_key.emplace(key, r);
  }
  RootSet out;
  for (const auto& [cls, key] : best) out.roots.push_back(by_key.at(key));
  out.roots = canonical_root_order(std::move(out.roots));
  return out;
}

std::vector<UnfoldedRep> enumerate_indecomposables(const CoxeterQuiver& q, std::size_t budget) {
  if (!is_finite_type(q)) throw Error(ErrorKind::NotFiniteType, "quiver is not of finite type");
  const RootSystem rs(q);
  std::vector<UnfoldedRep> out;
  for (const auto& root : rs.extended_positive_roots(budget).roots) {
    auto built = construct_indecomposable(q, root);
    if (end_dim(built.rep) != 1) throw Error(ErrorKind::Internal, "constructed representation is not a brick");
    out.push_back(std::move(built.rep));
  }
  return out;
}

std::vector<Path> enumerate_paths(const CoxeterQuiver& q, std::size_t length) {
  std::vector<Path> current;
  for (int v : q.vertices()) current.push_back(Path{v, v, {}});
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Path> next;
    for (const auto& p : current) {
      for (const auto& a : q.arrows()) {
        if (a.source != p.target) continue;
        Path longer{p.source, a.target, {a.id}};
        longer.arrows.insert(longer.arrows.end(), p.arrows.begin(), p.arrows.end());
        next.push_back(std::move(longer));
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

}  // namespace coxrep::reference
