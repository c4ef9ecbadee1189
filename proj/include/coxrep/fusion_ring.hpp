#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace coxrep {

/// Sorted, duplicate-free set of arrow labels (each >= 3).
using LabelSet = std::vector<int>;

/// Builds a LabelSet from arbitrary labels; throws InvalidLabel on n < 3.
LabelSet make_label_set(std::vector<int> labels);

/// Integer polynomial, coefficient of d^k at index k.
using IntPolynomial = std::vector<mpz_class>;

/// Simple object Pi_a of TLJ_n (or of its even part when n is odd).
struct SimpleIndex {
  int n = 3;
  int a = 0;

  /// Validating constructor: 0 <= a <= n-2, and a even when n is odd.
  static SimpleIndex make(int n, int a);

  auto operator<=>(const SimpleIndex&) const = default;
};

/// A simple object of the Deligne product over a label set: one SimpleIndex
/// per label, labels ascending. The empty object is the unit of the trivial
/// (empty label set) ring.
struct SimpleObject {
  std::vector<SimpleIndex> components;

  LabelSet labels() const;
  /// Index carried by the n-component; throws InvalidSimple if n is absent.
  int index_for(int n) const;
  SimpleObject with_index(int n, int a) const;
  bool is_unit() const;

  /// "n1:a1|n2:a2|..." with labels ascending; empty string for no labels.
  std::string key() const;
  static SimpleObject parse_key(std::string_view key);

  static SimpleObject unit(const LabelSet& labels);

  auto operator<=>(const SimpleObject&) const = default;
};

/// Element of the fusion ring K0 of the Deligne product of the TLJ
/// categories attached to a label set.
class FusionElem {
 public:
  using Terms = std::map<SimpleObject, mpz_class>;

  FusionElem() = default;
  explicit FusionElem(LabelSet labels);

  static FusionElem zero(const LabelSet& labels) { return FusionElem(labels); }
  static FusionElem unit(const LabelSet& labels);
  static FusionElem simple(const SimpleObject& object);
  /// [Pi^n_a] inside the ring over `labels` (other components trivial).
  static FusionElem tlj_simple(const LabelSet& labels, int n, int a);
  static FusionElem integer(const LabelSet& labels, const mpz_class& value);

  const LabelSet& labels() const { return labels_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(const SimpleObject& object) const;

  /// Adds coeff*[object]; drops the term if it cancels.
  void add_term(const SimpleObject& object, const mpz_class& coeff);

  FusionElem& operator+=(const FusionElem& other);
  FusionElem& operator-=(const FusionElem& other);
  FusionElem& operator*=(const mpz_class& scalar);
  FusionElem operator-() const;

  friend FusionElem operator+(FusionElem lhs, const FusionElem& rhs) { return lhs += rhs; }
  friend FusionElem operator-(FusionElem lhs, const FusionElem& rhs) { return lhs -= rhs; }
  friend FusionElem operator*(const FusionElem& lhs, const FusionElem& rhs);
  friend FusionElem operator*(FusionElem lhs, const mpz_class& rhs) { return lhs *= rhs; }
  friend FusionElem operator*(const mpz_class& lhs, FusionElem rhs) { return rhs *= lhs; }

  friend bool operator==(const FusionElem& lhs, const FusionElem& rhs) {
    return lhs.labels_ == rhs.labels_ && lhs.terms_ == rhs.terms_;
  }

  /// Human readable form, e.g. "[5:0] + 2[5:2]"; "0" for zero.
  std::string to_string() const;

 private:
  void require_same_labels(const FusionElem& other) const;

  LabelSet labels_;
  Terms terms_;
};

/// Delta_k by Delta_0 = 1, Delta_1 = d, Delta_{k+1} = d Delta_k - Delta_{k-1}.
IntPolynomial chebyshev(unsigned k);

/// Simples of TLJ_n (n even) or TLJ_n^even (n odd), ascending.
std::vector<SimpleIndex> tlj_simples(int n);

/// Summand indices of Pi_a (x) Pi_b in the full TLJ_n, ascending. Only the
/// range 0 <= a, b <= n-2 is checked (no parity constraint).
std::vector<int> tlj_fusion_rule(int n, int a, int b);

/// Summands of a (x) b for two simples of the same label.
std::vector<SimpleIndex> tlj_tensor(const SimpleIndex& a, const SimpleIndex& b);

/// Cartesian product of tlj_simples over the labels, lexicographic.
std::vector<SimpleObject> irr_enumerate(const LabelSet& labels);

FusionElem fusion_mul(const FusionElem& x, const FusionElem& y);

/// Simples X with X (x) X = 1 (every simple here is self-dual). Always
/// contains the unit first.
std::vector<SimpleObject> invertible_simples(const LabelSet& labels);

/// True iff x is the class of a nonzero object.
bool is_positive_elem(const FusionElem& x);

/// Numeric image under Pi^n_a -> Delta_a(2 cos(pi/n)).
double pf_eval(const FusionElem& x);

/// p(x) in the fusion ring of x, by Horner's rule.
FusionElem evaluate_polynomial(const IntPolynomial& p, const FusionElem& x);

/// p([Pi_1]) in the full K0(TLJ_n), as coefficients over Pi_0..Pi_{n-2}.
std::vector<mpz_class> evaluate_at_generator(int n, const IntPolynomial& p);

nlohmann::json to_json(const FusionElem& x);
FusionElem fusion_from_json(const nlohmann::json& j, const LabelSet& labels);

/// JSON number when it fits, decimal string otherwise.
nlohmann::json integer_to_json(const mpz_class& value);
mpz_class integer_from_json(const nlohmann::json& j);

}  // namespace coxrep
