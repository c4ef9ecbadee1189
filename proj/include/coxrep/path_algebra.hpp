#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "coxrep/fusion_ring.hpp"
#include "coxrep/quiver.hpp"

namespace coxrep {

/// A path of length n, stored as arrow ids (alpha_n, ..., alpha_1): the last
/// arrow traversed comes first. Length zero paths are the idempotents e_i.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }

  auto operator<=>(const Path&) const = default;
};

/// All paths of the given length, sorted. Sources are expanded in parallel.
std::vector<Path> enumerate_paths(const CoxeterQuiver& q, std::size_t length);

/// The product of [Pi^n_{n-3}] over the arrows of p.
FusionElem path_weight(const CoxeterQuiver& q, const Path& p);

/// Class of the length-n graded piece: |Q0| for n = 0, otherwise the sum of
/// path weights.
FusionElem grade_class(const CoxeterQuiver& q, std::size_t length);

/// Length of the longest path (the quiver is acyclic).
std::size_t longest_path_length(const CoxeterQuiver& q);

/// grade_class for every length from 0 to longest_path_length.
std::vector<FusionElem> graded_classes(const CoxeterQuiver& q);

/// Sum of all graded classes.
FusionElem path_algebra_class(const CoxeterQuiver& q);

nlohmann::json to_json(const Path& p);

}  // namespace coxrep
