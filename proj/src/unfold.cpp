#include "coxrep/unfold.hpp"

#include <algorithm>

#include "coxrep/error.hpp"

namespace coxrep {

std::string UnfoldedVertex::name() const { return simple.key() + "@" + std::to_string(vertex); }

std::size_t UnfoldedQuiver::index_of(std::size_t simple_index, int vertex) const {
  return simple_index * base_.vertex_count() + base_.position(vertex);
}

std::size_t UnfoldedQuiver::index_of(const SimpleObject& simple, int vertex) const {
  auto it = std::lower_bound(irr_.begin(), irr_.end(), simple);
  if (it == irr_.end() || *it != simple) {
    throw Error(ErrorKind::InvalidSimple, "'" + simple.key() + "' is not a simple of C(Q)");
  }
  return index_of(static_cast<std::size_t>(it - irr_.begin()), vertex);
}

std::vector<std::size_t> UnfoldedQuiver::fibre(int vertex) const {
  std::vector<std::size_t> out;
  out.reserve(irr_.size());
  for (std::size_t s = 0; s < irr_.size(); ++s) out.push_back(index_of(s, vertex));
  return out;
}

std::optional<std::size_t> UnfoldedQuiver::find_arrow(int provenance, std::size_t source, std::size_t target) const {
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    const auto& a = arrows_[k];
    if (a.provenance == provenance && a.source == source && a.target == target) return k;
  }
  return std::nullopt;
}

CoxeterQuiver UnfoldedQuiver::to_classical() const {
  RawQuiver raw;
  for (std::size_t v = 0; v < vertices_.size(); ++v) raw.vertices.push_back(static_cast<int>(v));
  for (const auto& a : arrows_) {
    raw.arrows.push_back({a.id, static_cast<int>(a.source), static_cast<int>(a.target), 3});
  }
  return validate(std::move(raw));
}

UnfoldedQuiver make_unfolded(CoxeterQuiver base, std::vector<std::vector<UnfoldedArrow>> per_arrow) {
  UnfoldedQuiver uq;
  uq.labels_ = base.labels();
  uq.irr_ = irr_enumerate(uq.labels_);
  for (const auto& simple : uq.irr_) {
    for (int v : base.vertices()) uq.vertices_.push_back({simple, v});
  }
  uq.base_ = std::move(base);
  int next_id = 0;
  for (auto& list : per_arrow) {
    std::sort(list.begin(), list.end(), [](const UnfoldedArrow& a, const UnfoldedArrow& b) {
      return std::tie(a.source, a.target) < std::tie(b.source, b.target);
    });
    for (auto& a : list) {
      a.id = next_id++;
      uq.arrows_.push_back(a);
    }
  }
  return uq;
}

UnfoldedQuiver unfold(const CoxeterQuiver& q) {
  const auto labels = q.labels();
  const auto irr = irr_enumerate(labels);
  const auto nverts = q.vertex_count();
  const auto& arrows = q.arrows();
  std::vector<std::vector<UnfoldedArrow>> per_arrow(arrows.size());

  // Component-wise criterion: C is reached from B iff C(n) is a summand of
  // Pi_{n-3} (x) B(n) and the other components agree.
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto& alpha = arrows[k];
    const int n = alpha.label;
    const auto src_pos = q.position(alpha.source);
    const auto dst_pos = q.position(alpha.target);
    auto& out = per_arrow[k];
    for (std::size_t b = 0; b < irr.size(); ++b) {
      const auto& simple = irr[b];
      for (int c : tlj_fusion_rule(n, n - 3, simple.index_for(n))) {
        const auto target_simple = simple.with_index(n, c);
        const auto t = static_cast<std::size_t>(std::lower_bound(irr.begin(), irr.end(), target_simple) - irr.begin());
        out.push_back({0, b * nverts + src_pos, t * nverts + dst_pos, alpha.id});
      }
    }
  }
  return make_unfolded(q, std::move(per_arrow));
}

std::size_t unfolded_arrow_count(const CoxeterQuiver& q, int arrow_id) {
  const int n = q.arrow(arrow_id).label;
  const auto r = irr_enumerate(q.labels()).size() / tlj_simples(n).size();
  const auto per = static_cast<std::size_t>(n % 2 == 0 ? 2 * (n - 2) : n - 2);
  return r * per;
}

RootVector fold_dim(const UnfoldedQuiver& uq, std::span<const long> dims) {
  if (dims.size() != uq.vertices().size()) {
    throw Error(ErrorKind::ShapeMismatch, "dimension vector does not cover the unfolded vertices");
  }
  RootVector out(uq.labels());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] < 0) throw Error(ErrorKind::ShapeMismatch, "negative dimension");
    if (dims[k] == 0) continue;
    const auto& uv = uq.vertices()[k];
    out.add(uv.vertex, FusionElem::simple(uv.simple) * mpz_class(dims[k]));
  }
  return out;
}

std::vector<ComponentType> unfolded_components(const UnfoldedQuiver& uq) { return classify_graph(uq.to_classical()); }

nlohmann::json to_json(const UnfoldedQuiver& uq) {
  nlohmann::json out;
  out["base"] = to_json(uq.base());
  out["vertices"] = nlohmann::json::array();
  for (const auto& v : uq.vertices()) out["vertices"].push_back(v.name());
  out["arrows"] = nlohmann::json::array();
  for (const auto& a : uq.arrows()) {
    out["arrows"].push_back({{"id", a.id},
                             {"source", uq.vertices()[a.source].name()},
                             {"target", uq.vertices()[a.target].name()},
                             {"label", 3},
                             {"provenance", a.provenance}});
  }
  return out;
}

UnfoldedQuiver unfolded_from_json(const nlohmann::json& j) {
  try {
    auto uq = unfold(quiver_from_json(j.at("base")));
    if (j.at("vertices").size() != uq.vertices().size() || j.at("arrows").size() != uq.arrows().size()) {
      throw Error(ErrorKind::Parse, "unfolded quiver does not match the unfolding of its base");
    }
    for (std::size_t k = 0; k < uq.vertices().size(); ++k) {
      if (j.at("vertices")[k].get<std::string>() != uq.vertices()[k].name()) {
        throw Error(ErrorKind::Parse, "unfolded vertex " + std::to_string(k) + " does not match");
      }
    }
    for (std::size_t k = 0; k < uq.arrows().size(); ++k) {
      const auto& ja = j.at("arrows")[k];
      const auto& a = uq.arrows()[k];
      if (ja.at("id").get<int>() != a.id || ja.at("provenance").get<int>() != a.provenance ||
          ja.at("source").get<std::string>() != uq.vertices()[a.source].name() ||
          ja.at("target").get<std::string>() != uq.vertices()[a.target].name()) {
        throw Error(ErrorKind::Parse, "unfolded arrow " + std::to_string(k) + " does not match");
      }
    }
    return uq;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("unfolded quiver JSON: ") + e.what());
  }
}

}  // namespace coxrep
