#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coxrep/fusion_ring.hpp"

namespace coxrep {

struct Arrow {
  int id = 0;
  int source = 0;
  int target = 0;
  int label = 3;

  bool operator==(const Arrow&) const = default;
};

/// Unvalidated quiver data as read from a file.
struct RawQuiver {
  std::vector<int> vertices;
  std::vector<Arrow> arrows;
};

/// Finite acyclic labelled multigraph. Vertices are kept ascending and
/// arrows ascending by id.
class CoxeterQuiver {
 public:
  CoxeterQuiver() = default;

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  LabelSet labels() const;
  bool has_vertex(int v) const;
  /// Position of v in vertices(); throws UnknownVertex.
  std::size_t position(int v) const;
  const Arrow& arrow(int id) const;

  bool is_sink(int v) const;
  bool is_source(int v) const;

  bool operator==(const CoxeterQuiver&) const = default;

 private:
  friend CoxeterQuiver validate(RawQuiver raw);
  friend CoxeterQuiver reverse_at(const CoxeterQuiver& q, int v);

  std::vector<int> vertices_;
  std::vector<Arrow> arrows_;
};

/// Canonicalizes and checks a raw quiver.
/// Errors: CyclicQuiver, InvalidLabel, LoopArrow, UnknownVertex (arrow
/// endpoint never declared) and Parse (duplicate ids).
CoxeterQuiver validate(RawQuiver raw);

/// Reverses every arrow incident to v, keeping labels.
CoxeterQuiver reverse_at(const CoxeterQuiver& q, int v);

/// Vertices ordered so that each one is a sink after reversing at all the
/// previous ones; ties broken by lowest id.
std::vector<int> admissible_sink_ordering(const CoxeterQuiver& q);

enum class DynkinFamily { A, B, D, E, F, G, H, I2, NotDynkin };

struct DynkinType {
  DynkinFamily family = DynkinFamily::NotDynkin;
  /// Rank, or the gonality m for I2(m).
  int parameter = 0;

  /// Canonicalizing constructor: D3 -> A3, I2(3) -> A2, I2(4) -> B2,
  /// I2(6) -> G2.
  static DynkinType make(DynkinFamily family, int parameter);
  static DynkinType not_dynkin() { return {}; }
  static DynkinType parse(std::string_view name);

  bool is_dynkin() const { return family != DynkinFamily::NotDynkin; }
  int vertex_count() const;
  std::string name() const;

  auto operator<=>(const DynkinType&) const = default;
};

struct ComponentType {
  std::vector<int> vertices;
  DynkinType type;
};

/// Undirected labelled edge for graph-level classification.
struct LabelledEdge {
  int u = 0;
  int v = 0;
  int label = 3;
};

/// Classifies each connected component of an undirected labelled multigraph.
/// Components are ordered by their smallest vertex.
std::vector<ComponentType> classify_labelled_graph(const std::vector<int>& vertices,
                                                   const std::vector<LabelledEdge>& edges);

/// Coxeter-Dynkin type of each connected component of the underlying graph.
std::vector<ComponentType> classify_graph(const CoxeterQuiver& q);

bool is_finite_type(const CoxeterQuiver& q);

/// Parses the line format (`vertex <id>`, `arrow <src> <dst> [label]`,
/// `#` comments) or, if the first non-blank character is '{', the JSON
/// mirror. Arrows without an id are numbered in order of appearance.
CoxeterQuiver parse_quiver(std::string_view text);
CoxeterQuiver parse_quiver_text(std::string_view text);
CoxeterQuiver quiver_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CoxeterQuiver& q);
std::string to_text(const CoxeterQuiver& q);

}  // namespace coxrep
