#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "coxrep/fusion_ring.hpp"

namespace coxrep {

/// Element of the free K0-module on the vertices of a labelled graph: one
/// fusion-ring entry per vertex. Zero entries are not stored.
class RootVector {
 public:
  using Entries = std::map<int, FusionElem>;

  RootVector() = default;
  explicit RootVector(LabelSet labels) : labels_(std::move(labels)) {}

  /// The simple root e_i.
  static RootVector basis(const LabelSet& labels, int vertex);

  const LabelSet& labels() const { return labels_; }
  const Entries& entries() const { return entries_; }
  FusionElem entry(int vertex) const;
  bool is_zero() const { return entries_.empty(); }

  void set(int vertex, FusionElem value);
  void add(int vertex, const FusionElem& value);

  RootVector& operator+=(const RootVector& other);
  RootVector& operator-=(const RootVector& other);
  RootVector operator-() const;
  /// Multiplies every entry by a ring element.
  RootVector scaled(const FusionElem& factor) const;

  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend bool operator==(const RootVector& a, const RootVector& b) {
    return a.labels_ == b.labels_ && a.entries_ == b.entries_;
  }

  /// Canonical compact JSON text; the sort key for root sets.
  std::string serialize() const;
  /// e.g. "(1: [5:0], 2: [5:0] + [5:2])"
  std::string to_string() const;

 private:
  void require_same_labels(const RootVector& other) const;

  LabelSet labels_;
  Entries entries_;
};

bool is_positive_vec(const RootVector& v);

nlohmann::json to_json(const RootVector& v);
RootVector root_from_json(const nlohmann::json& j, const LabelSet& labels);

}  // namespace coxrep
