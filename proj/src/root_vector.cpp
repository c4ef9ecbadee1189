#include "coxrep/root_vector.hpp"

#include <algorithm>
#include <charconv>

#include "coxrep/error.hpp"

namespace coxrep {

RootVector RootVector::basis(const LabelSet& labels, int vertex) {
  RootVector out(labels);
  out.set(vertex, FusionElem::unit(labels));
  return out;
}

FusionElem RootVector::entry(int vertex) const {
  auto it = entries_.find(vertex);
  return it == entries_.end() ? FusionElem(labels_) : it->second;
}

void RootVector::set(int vertex, FusionElem value) {
  if (value.labels() != labels_) throw Error(ErrorKind::MismatchedLabelSets, "root entry from another ring");
  if (value.is_zero()) {
    entries_.erase(vertex);
  } else {
    entries_[vertex] = std::move(value);
  }
}

void RootVector::add(int vertex, const FusionElem& value) {
  if (value.is_zero()) return;
  auto it = entries_.find(vertex);
  if (it == entries_.end()) {
    set(vertex, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) entries_.erase(it);
}

void RootVector::require_same_labels(const RootVector& other) const {
  if (labels_ != other.labels_) throw Error(ErrorKind::MismatchedLabelSets, "root vectors over different rings");
}

RootVector& RootVector::operator+=(const RootVector& other) {
  require_same_labels(other);
  for (const auto& [v, x] : other.entries_) add(v, x);
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& other) {
  require_same_labels(other);
  for (const auto& [v, x] : other.entries_) add(v, -x);
  return *this;
}

RootVector RootVector::operator-() const {
  RootVector out = *this;
  for (auto& [v, x] : out.entries_) x = -x;
  return out;
}

RootVector RootVector::scaled(const FusionElem& factor) const {
  RootVector out(labels_);
  for (const auto& [v, x] : entries_) out.set(v, fusion_mul(factor, x));
  return out;
}

std::string RootVector::serialize() const { return to_json(*this).dump(); }

std::string RootVector::to_string() const {
  std::string out = "(";
  bool first = true;
  for (const auto& [v, x] : entries_) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(v) + ": " + x.to_string();
  }
  return out + ")";
}

bool is_positive_vec(const RootVector& v) {
  if (v.is_zero()) return false;
  return std::all_of(v.entries().begin(), v.entries().end(),
                     [](const auto& e) { return is_positive_elem(e.second); });
}

nlohmann::json to_json(const RootVector& v) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [vertex, x] : v.entries()) out[std::to_string(vertex)] = to_json(x);
  return out;
}

RootVector root_from_json(const nlohmann::json& j, const LabelSet& labels) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "root vector must be a JSON object");
  RootVector out(labels);
  for (const auto& [key, value] : j.items()) {
    int vertex = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), vertex);
    if (ec != std::errc() || ptr != key.data() + key.size()) {
      throw Error(ErrorKind::Parse, "bad vertex id '" + key + "'");
    }
    out.add(vertex, fusion_from_json(value, labels));
  }
  return out;
}

}  // namespace coxrep
