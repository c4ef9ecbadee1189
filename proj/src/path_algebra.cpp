#include "coxrep/path_algebra.hpp"

#include <algorithm>
#include <map>

namespace coxrep {

namespace {

std::map<int, std::vector<const Arrow*>> outgoing_arrows(const CoxeterQuiver& q) {
  std::map<int, std::vector<const Arrow*>> out;
  for (int v : q.vertices()) out[v];
  for (const auto& a : q.arrows()) out[a.source].push_back(&a);
  return out;
}

void extend(const std::map<int, std::vector<const Arrow*>>& outgoing, std::size_t remaining, int at,
            std::vector<int>& trail, int source, std::vector<Path>& out) {
  if (remaining == 0) {
    out.push_back(Path{source, at, std::vector<int>(trail.rbegin(), trail.rend())});
    return;
  }
  for (const Arrow* a : outgoing.at(at)) {
    trail.push_back(a->id);
    extend(outgoing, remaining - 1, a->target, trail, source, out);
    trail.pop_back();
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const CoxeterQuiver& q, std::size_t length) {
  const auto outgoing = outgoing_arrows(q);
  const auto& vertices = q.vertices();
  std::vector<std::vector<Path>> per_source(vertices.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    std::vector<int> trail;
    extend(outgoing, length, vertices[k], trail, vertices[k], per_source[k]);
  }
  std::vector<Path> out;
  for (auto& list : per_source) out.insert(out.end(), list.begin(), list.end());
  std::sort(out.begin(), out.end());
  return out;
}

FusionElem path_weight(const CoxeterQuiver& q, const Path& p) {
  const auto labels = q.labels();
  auto out = FusionElem::unit(labels);
  for (int id : p.arrows) {
    const auto& a = q.arrow(id);
    out = out * FusionElem::tlj_simple(labels, a.label, a.label - 3);
  }
  return out;
}

FusionElem grade_class(const CoxeterQuiver& q, std::size_t length) {
  const auto labels = q.labels();
  if (length == 0) return FusionElem::integer(labels, static_cast<long>(q.vertex_count()));
  FusionElem out(labels);
  for (const auto& p : enumerate_paths(q, length)) out += path_weight(q, p);
  return out;
}

std::size_t longest_path_length(const CoxeterQuiver& q) {
  // Longest path ending at each vertex, in topological order.
  auto order = admissible_sink_ordering(q);
  std::reverse(order.begin(), order.end());
  std::map<int, std::size_t> best;
  for (int v : q.vertices()) best[v] = 0;
  std::size_t out = 0;
  for (int v : order) {
    for (const auto& a : q.arrows()) {
      if (a.source == v) best[a.target] = std::max(best[a.target], best[v] + 1);
    }
    out = std::max(out, best[v]);
  }
  return out;
}

std::vector<FusionElem> graded_classes(const CoxeterQuiver& q) {
  std::vector<FusionElem> out;
  const auto top = longest_path_length(q);
  for (std::size_t n = 0; n <= top; ++n) out.push_back(grade_class(q, n));
  return out;
}

FusionElem path_algebra_class(const CoxeterQuiver& q) {
  FusionElem out(q.labels());
  for (const auto& g : graded_classes(q)) out += g;
  return out;
}

nlohmann::json to_json(const Path& p) {
  return {{"source", p.source}, {"target", p.target}, {"arrows", p.arrows}};
}

}  // namespace coxrep
