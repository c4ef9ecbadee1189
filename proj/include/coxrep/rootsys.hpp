#pragma once

#include <cstddef>
#include <vector>

#include "coxrep/error.hpp"
#include "coxrep/fusion_ring.hpp"
#include "coxrep/quiver.hpp"
#include "coxrep/root_vector.hpp"

namespace coxrep {

inline constexpr std::size_t kDefaultRootBudget = 10'000;

/// Deduplicated roots in canonical order (ascending serialized form).
struct RootSet {
  std::vector<RootVector> roots;
  bool closed = true;

  bool contains(const RootVector& v) const;
};

/// Raised when an orbit grows past its budget; carries what was found.
class OrbitBudgetExceeded : public Error {
 public:
  OrbitBudgetExceeded(const std::string& what, RootSet partial)
      : Error(ErrorKind::OrbitBudgetExceeded, what), partial_(std::move(partial)) {}

  const RootSet& partial() const { return partial_; }

 private:
  RootSet partial_;
};

/// Root system of a labelled graph over its fusion ring. Only the underlying
/// labelled graph of the quiver matters.
class RootSystem {
 public:
  explicit RootSystem(const CoxeterQuiver& graph);

  const LabelSet& labels() const { return labels_; }
  const std::vector<int>& vertices() const { return vertices_; }

  RootVector simple_root(int vertex) const;
  /// B(e_i, e_j).
  const FusionElem& form(int i, int j) const;
  FusionElem bilinear_form(const RootVector& u, const RootVector& v) const;

  /// sigma_i(v) = v - B(e_i, v) e_i.
  RootVector reflect(int vertex, const RootVector& v) const;
  /// sigma_{k_n} ... sigma_{k_1}(v) for ordering (k_1, ..., k_n), which must be
  /// a permutation of the vertices (InvalidOrdering otherwise).
  RootVector coxeter_apply(const std::vector<int>& ordering, const RootVector& v) const;
  /// Least m >= 1 with c^m = id; CapExceeded past `cap`.
  std::size_t coxeter_order(const std::vector<int>& ordering, std::size_t cap = 1000) const;

  /// Full W-orbit of the simple roots (both signs). Frontier expansion runs in
  /// parallel; the result is independent of scheduling.
  RootSet root_orbit(std::size_t budget = kDefaultRootBudget) const;
  /// Positive part of the orbit, one root per class under multiplication by
  /// invertible simples. With an even label the orbit contains [Pi_{n-2}]
  /// multiples of roots; those are counted once here and come back as
  /// extended roots.
  RootSet positive_roots(std::size_t budget = kDefaultRootBudget) const;
  /// {[A] b : A simple, b positive root}.
  RootSet extended_positive_roots(std::size_t budget = kDefaultRootBudget) const;

  /// Least r >= 1 such that c^r(v) is not positive; CapExceeded if r > cap.
  std::size_t depositivize_exponent(const std::vector<int>& ordering, const RootVector& v, std::size_t cap) const;

  /// Throws MismatchedQuiver unless v lives over this graph.
  void check(const RootVector& v) const;
  void check_ordering(const std::vector<int>& ordering) const;

 private:
  std::size_t position(int vertex) const;

  LabelSet labels_;
  std::vector<int> vertices_;
  std::vector<std::vector<FusionElem>> form_;
};

/// Sorts by serialized form and removes duplicates.
std::vector<RootVector> canonical_root_order(std::vector<RootVector> roots);

}  // namespace coxrep
