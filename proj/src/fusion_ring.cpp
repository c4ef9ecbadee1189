#include "coxrep/fusion_ring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "coxrep/error.hpp"

namespace coxrep {

namespace {

int parse_int(std::string_view text, std::string_view context) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorKind::Parse, "bad integer '" + std::string(text) + "' in " + std::string(context));
  }
  return value;
}

// Product of two simples: Cartesian product of the per-label summand sets.
std::vector<SimpleObject> multiply_simples(const SimpleObject& x, const SimpleObject& y) {
  std::vector<SimpleObject> result{SimpleObject{}};
  for (std::size_t c = 0; c < x.components.size(); ++c) {
    const auto summands = tlj_tensor(x.components[c], y.components[c]);
    std::vector<SimpleObject> next;
    next.reserve(result.size() * summands.size());
    for (const auto& prefix : result) {
      for (const auto& s : summands) {
        SimpleObject extended = prefix;
        extended.components.push_back(s);
        next.push_back(std::move(extended));
      }
    }
    result = std::move(next);
  }
  return result;
}

}  // namespace

LabelSet make_label_set(std::vector<int> labels) {
  for (int n : labels) {
    if (n < 3) throw Error(ErrorKind::InvalidLabel, "label " + std::to_string(n) + " < 3");
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

SimpleIndex SimpleIndex::make(int n, int a) {
  if (n < 3) throw Error(ErrorKind::InvalidLabel, "label " + std::to_string(n) + " < 3");
  if (a < 0 || a > n - 2 || (n % 2 == 1 && a % 2 == 1)) {
    throw Error(ErrorKind::InvalidSimple,
                "Pi_" + std::to_string(a) + " is not a simple of C_" + std::to_string(n));
  }
  return SimpleIndex{n, a};
}

// ---------------------------------------------------------------------------
// SimpleObject

LabelSet SimpleObject::labels() const {
  LabelSet out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.n);
  return out;
}

int SimpleObject::index_for(int n) const {
  for (const auto& c : components) {
    if (c.n == n) return c.a;
  }
  throw Error(ErrorKind::InvalidSimple, "no component for label " + std::to_string(n));
}

SimpleObject SimpleObject::with_index(int n, int a) const {
  SimpleObject out = *this;
  for (auto& c : out.components) {
    if (c.n == n) {
      c = SimpleIndex::make(n, a);
      return out;
    }
  }
  throw Error(ErrorKind::InvalidSimple, "no component for label " + std::to_string(n));
}

bool SimpleObject::is_unit() const {
  return std::all_of(components.begin(), components.end(), [](const SimpleIndex& c) { return c.a == 0; });
}

std::string SimpleObject::key() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i != 0) out += '|';
    out += std::to_string(components[i].n);
    out += ':';
    out += std::to_string(components[i].a);
  }
  return out;
}

SimpleObject SimpleObject::parse_key(std::string_view key) {
  SimpleObject out;
  if (key.empty()) return out;
  std::size_t start = 0;
  while (start <= key.size()) {
    const auto bar = key.find('|', start);
    const auto part = key.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    const auto colon = part.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::Parse, "bad simple key '" + std::string(key) + "'");
    }
    const int n = parse_int(part.substr(0, colon), "simple key");
    const int a = parse_int(part.substr(colon + 1), "simple key");
    out.components.push_back(SimpleIndex::make(n, a));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  for (std::size_t i = 1; i < out.components.size(); ++i) {
    if (out.components[i - 1].n >= out.components[i].n) {
      throw Error(ErrorKind::Parse, "labels in key '" + std::string(key) + "' not strictly ascending");
    }
  }
  return out;
}

SimpleObject SimpleObject::unit(const LabelSet& labels) {
  SimpleObject out;
  out.components.reserve(labels.size());
  for (int n : labels) out.components.push_back(SimpleIndex::make(n, 0));
  return out;
}

// ---------------------------------------------------------------------------
// FusionElem

FusionElem::FusionElem(LabelSet labels) : labels_(std::move(labels)) {}

FusionElem FusionElem::unit(const LabelSet& labels) { return integer(labels, 1); }

FusionElem FusionElem::integer(const LabelSet& labels, const mpz_class& value) {
  FusionElem out(labels);
  out.add_term(SimpleObject::unit(labels), value);
  return out;
}

FusionElem FusionElem::simple(const SimpleObject& object) {
  FusionElem out(object.labels());
  out.add_term(object, 1);
  return out;
}

FusionElem FusionElem::tlj_simple(const LabelSet& labels, int n, int a) {
  return simple(SimpleObject::unit(labels).with_index(n, a));
}

mpz_class FusionElem::coefficient(const SimpleObject& object) const {
  auto it = terms_.find(object);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void FusionElem::add_term(const SimpleObject& object, const mpz_class& coeff) {
  if (coeff == 0) return;
  if (object.labels() != labels_) {
    throw Error(ErrorKind::MismatchedLabelSets, "simple '" + object.key() + "' outside the ring");
  }
  auto [it, inserted] = terms_.try_emplace(object, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void FusionElem::require_same_labels(const FusionElem& other) const {
  if (labels_ != other.labels_) {
    throw Error(ErrorKind::MismatchedLabelSets, "fusion elements live in different rings");
  }
}

FusionElem& FusionElem::operator+=(const FusionElem& other) {
  require_same_labels(other);
  for (const auto& [object, coeff] : other.terms_) add_term(object, coeff);
  return *this;
}

FusionElem& FusionElem::operator-=(const FusionElem& other) {
  require_same_labels(other);
  for (const auto& [object, coeff] : other.terms_) add_term(object, -coeff);
  return *this;
}

FusionElem& FusionElem::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [object, coeff] : terms_) coeff *= scalar;
  return *this;
}

FusionElem FusionElem::operator-() const {
  FusionElem out = *this;
  for (auto& [object, coeff] : out.terms_) coeff = -coeff;
  return out;
}

FusionElem operator*(const FusionElem& lhs, const FusionElem& rhs) { return fusion_mul(lhs, rhs); }

std::string FusionElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [object, coeff] : terms_) {
    mpz_class magnitude = abs(coeff);
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;
    if (magnitude != 1) out += magnitude.get_str();
    out += "[" + object.key() + "]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// TLJ combinatorics

IntPolynomial chebyshev(unsigned k) {
  IntPolynomial prev{1};
  if (k == 0) return prev;
  IntPolynomial cur{0, 1};
  for (unsigned step = 1; step < k; ++step) {
    IntPolynomial next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<SimpleIndex> tlj_simples(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidLabel, "label " + std::to_string(n) + " < 3");
  std::vector<SimpleIndex> out;
  const int step = n % 2 == 0 ? 1 : 2;
  for (int a = 0; a <= n - 2; a += step) out.push_back(SimpleIndex{n, a});
  return out;
}

std::vector<int> tlj_fusion_rule(int n, int a, int b) {
  if (n < 3) throw Error(ErrorKind::InvalidLabel, "label " + std::to_string(n) + " < 3");
  if (a < 0 || b < 0 || a > n - 2 || b > n - 2) {
    throw Error(ErrorKind::InvalidSimple, "index out of range for TLJ_" + std::to_string(n));
  }
  const int low = std::abs(a - b);
  const int high = a + b <= n - 2 ? a + b : 2 * n - (a + b) - 4;
  std::vector<int> out;
  for (int c = low; c <= high; c += 2) out.push_back(c);
  return out;
}

std::vector<SimpleIndex> tlj_tensor(const SimpleIndex& a, const SimpleIndex& b) {
  if (a.n != b.n) throw Error(ErrorKind::MismatchedLabelSets, "tensoring simples of different labels");
  SimpleIndex::make(a.n, a.a);
  SimpleIndex::make(b.n, b.a);
  std::vector<SimpleIndex> out;
  for (int c : tlj_fusion_rule(a.n, a.a, b.a)) out.push_back(SimpleIndex{a.n, c});
  return out;
}

std::vector<SimpleObject> irr_enumerate(const LabelSet& labels) {
  std::vector<SimpleObject> result{SimpleObject{}};
  for (int n : labels) {
    const auto simples = tlj_simples(n);
    std::vector<SimpleObject> next;
    next.reserve(result.size() * simples.size());
    for (const auto& prefix : result) {
      for (const auto& s : simples) {
        SimpleObject extended = prefix;
        extended.components.push_back(s);
        next.push_back(std::move(extended));
      }
    }
    result = std::move(next);
  }
  return result;
}

FusionElem fusion_mul(const FusionElem& x, const FusionElem& y) {
  if (x.labels() != y.labels()) {
    throw Error(ErrorKind::MismatchedLabelSets, "fusion elements live in different rings");
  }
  FusionElem out(x.labels());
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) {
      const mpz_class coeff = cx * cy;
      for (const auto& summand : multiply_simples(bx, by)) out.add_term(summand, coeff);
    }
  }
  return out;
}

bool is_positive_elem(const FusionElem& x) {
  if (x.is_zero()) return false;
  return std::all_of(x.terms().begin(), x.terms().end(), [](const auto& t) { return t.second > 0; });
}

double pf_eval(const FusionElem& x) {
  double total = 0.0;
  for (const auto& [object, coeff] : x.terms()) {
    double value = coeff.get_d();
    for (const auto& c : object.components) {
      const double d = 2.0 * std::cos(std::numbers::pi / c.n);
      double prev = 1.0;
      double cur = d;
      if (c.a == 0) cur = 1.0;
      for (int k = 1; k < c.a; ++k) {
        const double next = d * cur - prev;
        prev = cur;
        cur = next;
      }
      value *= cur;
    }
    total += value;
  }
  return total;
}

FusionElem evaluate_polynomial(const IntPolynomial& p, const FusionElem& x) {
  FusionElem acc(x.labels());
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = fusion_mul(acc, x);
    acc += FusionElem::integer(x.labels(), *it);
  }
  return acc;
}

std::vector<mpz_class> evaluate_at_generator(int n, const IntPolynomial& p) {
  std::vector<mpz_class> acc(static_cast<std::size_t>(n - 1), 0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    std::vector<mpz_class> next(acc.size(), 0);
    for (int b = 0; b <= n - 2; ++b) {
      if (acc[b] == 0) continue;
      for (int c : tlj_fusion_rule(n, 1, b)) next[c] += acc[b];
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json integer_to_json(const mpz_class& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class out;
    if (out.set_str(j.get<std::string>(), 10) != 0) {
      throw Error(ErrorKind::Parse, "bad integer string '" + j.get<std::string>() + "'");
    }
    return out;
  }
  throw Error(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

nlohmann::json to_json(const FusionElem& x) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [object, coeff] : x.terms()) out[object.key()] = integer_to_json(coeff);
  return out;
}

FusionElem fusion_from_json(const nlohmann::json& j, const LabelSet& labels) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "fusion element must be a JSON object");
  FusionElem out(labels);
  for (const auto& [key, value] : j.items()) {
    const auto object = SimpleObject::parse_key(key);
    if (object.labels() != labels) {
      throw Error(ErrorKind::MismatchedLabelSets, "key '" + key + "' does not match the label set");
    }
    out.add_term(object, integer_from_json(value));
  }
  return out;
}

std::vector<SimpleObject> invertible_simples(const LabelSet& labels) {
  const auto unit = FusionElem::unit(labels);
  std::vector<SimpleObject> out{SimpleObject::unit(labels)};
  for (const auto& x : irr_enumerate(labels)) {
    if (x.is_unit()) continue;
    const auto e = FusionElem::simple(x);
    if (fusion_mul(e, e) == unit) out.push_back(x);
  }
  return out;
}

}  // namespace coxrep
