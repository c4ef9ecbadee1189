#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxrep/fusion_ring.hpp"
#include "coxrep/quiver.hpp"
#include "coxrep/root_vector.hpp"

namespace coxrep {

struct UnfoldedVertex {
  SimpleObject simple;
  int vertex = 0;

  /// "<simple-key>@<vertex-id>"
  std::string name() const;

  auto operator<=>(const UnfoldedVertex&) const = default;
};

struct UnfoldedArrow {
  int id = 0;
  std::size_t source = 0;  // index into UnfoldedQuiver::vertices()
  std::size_t target = 0;
  int provenance = 0;      // id of the arrow of the base quiver

  bool operator==(const UnfoldedArrow&) const = default;
};

/// The classical quiver with vertex set Irr x Q0 (ordered by simple, then
/// vertex) and one arrow (B,i) -> (C,j) per arrow alpha: i -> j with
/// C a summand of Pi_{n-3} (x) B, n the label of alpha.
class UnfoldedQuiver {
 public:
  UnfoldedQuiver() = default;

  const CoxeterQuiver& base() const { return base_; }
  const LabelSet& labels() const { return labels_; }
  const std::vector<SimpleObject>& irr() const { return irr_; }
  const std::vector<UnfoldedVertex>& vertices() const { return vertices_; }
  const std::vector<UnfoldedArrow>& arrows() const { return arrows_; }

  std::size_t index_of(const SimpleObject& simple, int vertex) const;
  std::size_t index_of(std::size_t simple_index, int vertex) const;
  /// Indices of all (A, vertex), in Irr order.
  std::vector<std::size_t> fibre(int vertex) const;
  std::optional<std::size_t> find_arrow(int provenance, std::size_t source, std::size_t target) const;

  /// Q-check as a classical quiver: vertex ids are indices, labels are 3,
  /// arrow ids are the unfolded arrow ids.
  CoxeterQuiver to_classical() const;

  bool operator==(const UnfoldedQuiver&) const = default;

 private:
  friend UnfoldedQuiver make_unfolded(CoxeterQuiver base, std::vector<std::vector<UnfoldedArrow>> per_arrow);

  CoxeterQuiver base_;
  LabelSet labels_;
  std::vector<SimpleObject> irr_;
  std::vector<UnfoldedVertex> vertices_;
  std::vector<UnfoldedArrow> arrows_;
};

/// Assembles an unfolded quiver from per-base-arrow arrow lists (in base
/// arrow order); assigns ids in order. Shared by the parallel and serial
/// builders.
UnfoldedQuiver make_unfolded(CoxeterQuiver base, std::vector<std::vector<UnfoldedArrow>> per_arrow);

/// Builds the unfolding; base arrows are processed in parallel.
UnfoldedQuiver unfold(const CoxeterQuiver& q);

/// |ufld(alpha)| by the closed form: r * 2(n-2) for even n, r * (n-2) for odd
/// n, where r = |Irr| / |tlj_simples(n)|.
std::size_t unfolded_arrow_count(const CoxeterQuiver& q, int arrow_id);

/// Per base vertex i, the element sum_A dims[(A,i)] [A].
RootVector fold_dim(const UnfoldedQuiver& uq, std::span<const long> dims);

/// Coxeter-Dynkin types of the components of the underlying graph of Q-check.
std::vector<ComponentType> unfolded_components(const UnfoldedQuiver& uq);

nlohmann::json to_json(const UnfoldedQuiver& uq);
/// Reads the JSON form and checks it against a fresh unfolding of its base.
UnfoldedQuiver unfolded_from_json(const nlohmann::json& j);

}  // namespace coxrep
