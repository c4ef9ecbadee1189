#include "coxrep/rootsys.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>

namespace coxrep {

bool RootSet::contains(const RootVector& v) const {
  const auto key = v.serialize();
  auto it = std::lower_bound(roots.begin(), roots.end(), key,
                             [](const RootVector& r, const std::string& k) { return r.serialize() < k; });
  return it != roots.end() && it->serialize() == key;
}

std::vector<RootVector> canonical_root_order(std::vector<RootVector> roots) {
  std::map<std::string, RootVector> keyed;
  for (auto& r : roots) {
    auto key = r.serialize();
    keyed.try_emplace(std::move(key), std::move(r));
  }
  std::vector<RootVector> out;
  out.reserve(keyed.size());
  for (auto& [key, r] : keyed) out.push_back(std::move(r));
  return out;
}

RootSystem::RootSystem(const CoxeterQuiver& graph) : labels_(graph.labels()), vertices_(graph.vertices()) {
  const auto n = vertices_.size();
  form_.assign(n, std::vector<FusionElem>(n, FusionElem(labels_)));
  for (std::size_t i = 0; i < n; ++i) form_[i][i] = FusionElem::integer(labels_, 2);
  for (const auto& a : graph.arrows()) {
    const auto s = graph.position(a.source);
    const auto t = graph.position(a.target);
    const auto weight = FusionElem::tlj_simple(labels_, a.label, a.label - 3);
    form_[s][t] -= weight;
    form_[t][s] -= weight;
  }
}

std::size_t RootSystem::position(int vertex) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), vertex);
  if (it == vertices_.end() || *it != vertex) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(vertex));
  return static_cast<std::size_t>(it - vertices_.begin());
}

void RootSystem::check(const RootVector& v) const {
  if (v.labels() != labels_) throw Error(ErrorKind::MismatchedQuiver, "root vector over another fusion ring");
  for (const auto& [vertex, x] : v.entries()) {
    if (!std::binary_search(vertices_.begin(), vertices_.end(), vertex)) {
      throw Error(ErrorKind::MismatchedQuiver, "root vector has an entry at unknown vertex " + std::to_string(vertex));
    }
  }
}

void RootSystem::check_ordering(const std::vector<int>& ordering) const {
  auto sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != vertices_) throw Error(ErrorKind::InvalidOrdering, "ordering is not a permutation of the vertices");
}

RootVector RootSystem::simple_root(int vertex) const {
  position(vertex);
  return RootVector::basis(labels_, vertex);
}

const FusionElem& RootSystem::form(int i, int j) const { return form_[position(i)][position(j)]; }

FusionElem RootSystem::bilinear_form(const RootVector& u, const RootVector& v) const {
  check(u);
  check(v);
  FusionElem out(labels_);
  for (const auto& [i, x] : u.entries()) {
    const auto pi = position(i);
    for (const auto& [j, y] : v.entries()) {
      const auto& b = form_[pi][position(j)];
      if (!b.is_zero()) out += fusion_mul(fusion_mul(x, b), y);
    }
  }
  return out;
}

RootVector RootSystem::reflect(int vertex, const RootVector& v) const {
  check(v);
  const auto pi = position(vertex);
  FusionElem coeff(labels_);
  for (const auto& [j, y] : v.entries()) {
    const auto& b = form_[pi][position(j)];
    if (!b.is_zero()) coeff += fusion_mul(b, y);
  }
  RootVector out = v;
  out.add(vertex, -coeff);
  return out;
}

RootVector RootSystem::coxeter_apply(const std::vector<int>& ordering, const RootVector& v) const {
  check_ordering(ordering);
  RootVector out = v;
  for (int vertex : ordering) out = reflect(vertex, out);
  return out;
}

std::size_t RootSystem::coxeter_order(const std::vector<int>& ordering, std::size_t cap) const {
  check_ordering(ordering);
  std::vector<RootVector> images;
  for (int v : vertices_) images.push_back(simple_root(v));
  for (std::size_t m = 1; m <= cap; ++m) {
    bool identity = true;
    for (std::size_t k = 0; k < images.size(); ++k) {
      images[k] = coxeter_apply(ordering, images[k]);
      if (!(images[k] == simple_root(vertices_[k]))) identity = false;
    }
    if (identity) return m;
  }
  throw Error(ErrorKind::CapExceeded, "Coxeter element order exceeds " + std::to_string(cap));
}

RootSet RootSystem::root_orbit(std::size_t budget) const {
  std::map<std::string, RootVector> seen;
  std::vector<RootVector> frontier;
  auto finish = [&](bool closed) {
    RootSet out;
    out.closed = closed;
    for (auto& [key, r] : seen) out.roots.push_back(r);
    return out;
  };
  for (int v : vertices_) {
    auto e = simple_root(v);
    seen.emplace(e.serialize(), e);
    frontier.push_back(std::move(e));
  }
  if (seen.size() > budget) throw OrbitBudgetExceeded("root orbit exceeds budget", finish(false));

  while (!frontier.empty()) {
    std::vector<std::vector<RootVector>> images(frontier.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      try {
        images[k].reserve(vertices_.size());
        for (int v : vertices_) images[k].push_back(reflect(v, frontier[k]));
      } catch (...) {
#pragma omp critical(coxrep_orbit_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<RootVector> next;
    for (auto& list : images) {
      for (auto& r : list) {
        auto key = r.serialize();
        if (seen.contains(key)) continue;
        seen.emplace(std::move(key), r);
        next.push_back(std::move(r));
        if (seen.size() > budget) throw OrbitBudgetExceeded("root orbit exceeds budget", finish(false));
      }
    }
    frontier = std::move(next);
  }
  return finish(true);
}

namespace {

// Keeps one root per class {[g] v : g invertible}; the smallest serialized
// member that is itself in the orbit.
RootSet positive_up_to_units(const RootSet& all, const LabelSet& labels) {
  const auto units = invertible_simples(labels);
  std::set<std::string> positive;
  for (const auto& r : all.roots) {
    if (is_positive_vec(r)) positive.insert(r.serialize());
  }
  RootSet out;
  out.closed = all.closed;
  for (const auto& r : all.roots) {
    const auto key = r.serialize();
    if (!positive.contains(key)) continue;
    bool smallest = true;
    for (std::size_t k = 1; k < units.size() && smallest; ++k) {
      const auto other = r.scaled(FusionElem::simple(units[k])).serialize();
      if (other < key && positive.contains(other)) smallest = false;
    }
    if (smallest) out.roots.push_back(r);
  }
  return out;
}

}  // namespace

RootSet RootSystem::positive_roots(std::size_t budget) const {
  try {
    return positive_up_to_units(root_orbit(budget), labels_);
  } catch (const OrbitBudgetExceeded& e) {
    throw OrbitBudgetExceeded(e.what(), positive_up_to_units(e.partial(), labels_));
  }
}

RootSet RootSystem::extended_positive_roots(std::size_t budget) const {
  const auto base = positive_roots(budget);
  std::vector<RootVector> all;
  for (const auto& simple : irr_enumerate(labels_)) {
    const auto factor = FusionElem::simple(simple);
    for (const auto& r : base.roots) all.push_back(r.scaled(factor));
  }
  RootSet out;
  out.roots = canonical_root_order(std::move(all));
  if (out.roots.size() > budget) {
    out.closed = false;
    throw OrbitBudgetExceeded("extended roots exceed budget", out);
  }
  return out;
}

std::size_t RootSystem::depositivize_exponent(const std::vector<int>& ordering, const RootVector& v,
                                              std::size_t cap) const {
  check(v);
  check_ordering(ordering);
  if (!is_positive_vec(v)) throw Error(ErrorKind::NotPositive, "vector " + v.to_string() + " is not positive");
  RootVector cur = v;
  for (std::size_t r = 1; r <= cap; ++r) {
    cur = coxeter_apply(ordering, cur);
    if (!is_positive_vec(cur)) return r;
  }
  throw Error(ErrorKind::CapExceeded, "still positive after " + std::to_string(cap) + " Coxeter steps");
}

}  // namespace coxrep
