#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "coxrep/exact_linalg.hpp"
#include "coxrep/fusion_ring.hpp"
#include "coxrep/quiver.hpp"
#include "coxrep/root_vector.hpp"
#include "coxrep/rootsys.hpp"
#include "coxrep/unfold.hpp"

namespace coxrep {

/// A representation of a Coxeter quiver Q stored in unfolded coordinates: a
/// rational vector space per vertex of Q-check and a matrix per arrow. The
/// matrix of (B,i) -> (C,j) is dims[(C,j)] x dims[(B,i)].
class UnfoldedRep {
 public:
  UnfoldedRep() = default;
  /// Checks every matrix shape against `dims` (ShapeMismatch).
  UnfoldedRep(UnfoldedQuiver quiver, std::vector<long> dims, std::vector<RationalMatrix> maps);

  static UnfoldedRep zero(UnfoldedQuiver quiver);

  const UnfoldedQuiver& quiver() const { return quiver_; }
  const CoxeterQuiver& base() const { return quiver_.base(); }
  const std::vector<long>& dims() const { return dims_; }
  const std::vector<RationalMatrix>& maps() const { return maps_; }
  long total_dim() const;

  bool operator==(const UnfoldedRep&) const = default;

 private:
  UnfoldedQuiver quiver_;
  std::vector<long> dims_;
  std::vector<RationalMatrix> maps_;
};

enum class ReflectionSign { Plus, Minus };

struct ReflectionStep {
  int vertex = 0;
  ReflectionSign sign = ReflectionSign::Plus;

  bool operator==(const ReflectionStep&) const = default;
};

/// Steps applied first to last.
using ReflectionWord = std::vector<ReflectionStep>;

/// S(i) (x) A: one dimension at (A, i), nothing elsewhere.
UnfoldedRep simple_rep(const CoxeterQuiver& q, int vertex, const SimpleObject& simple);

RootVector dim_vector(const UnfoldedRep& v);

UnfoldedRep direct_sum(const UnfoldedRep& a, const UnfoldedRep& b);

/// R+_i at a sink: the classical BGP kernel construction at every (A, i).
/// The result lives over reverse_at(Q, i). Throws NotASink.
UnfoldedRep reflect_plus(int vertex, const UnfoldedRep& v);

/// R-_i at a source via cokernels. Throws NotASource.
UnfoldedRep reflect_minus(int vertex, const UnfoldedRep& v);

UnfoldedRep apply_word(const ReflectionWord& word, UnfoldedRep v);

/// Basis of Hom(v, w); each element is one matrix per unfolded vertex.
std::vector<std::vector<RationalMatrix>> hom_basis(const UnfoldedRep& v, const UnfoldedRep& w);
std::size_t hom_dim(const UnfoldedRep& v, const UnfoldedRep& w);

/// dim End(v), from the solution space of the commuting equations.
std::size_t end_dim(const UnfoldedRep& v);

/// How an indecomposable was reached: v = word(S(start_vertex) (x) simple)
/// where S lives over the quiver reflected along the first
/// `prefix_length` vertices of the admissible ordering.
struct IndecomposableConstruction {
  UnfoldedRep rep;
  ReflectionWord word;
  int start_vertex = 0;
  SimpleObject simple;
  std::size_t coxeter_power = 0;
  std::size_t prefix_length = 0;
};

/// Runs the reflection search for `root` without checking finite type or
/// root membership first. Throws NotAnExtendedRoot if the search walks out
/// of the positive cone without meeting a simple.
IndecomposableConstruction construct_indecomposable(const CoxeterQuiver& q, const RootVector& root);

/// The indecomposable of dimension vector `root` (an extended positive
/// root of a finite-type quiver). Postcondition: dim_vector == root and
/// end_dim == 1.
UnfoldedRep indecomposable_for(const CoxeterQuiver& q, const RootVector& root,
                               std::size_t budget = kDefaultRootBudget);

/// One indecomposable per extended positive root, ordered by serialized
/// dimension vector. Roots are processed in parallel.
std::vector<UnfoldedRep> enumerate_indecomposables(const CoxeterQuiver& q,
                                                   std::size_t budget = kDefaultRootBudget);

inline constexpr std::uint64_t kDefaultDecomposeSeed = 20240521;

struct Decomposition {
  std::vector<UnfoldedRep> summands;
  std::uint64_t seed = kDefaultDecomposeSeed;
};

/// Krull-Schmidt decomposition by Fitting splitting: pick an endomorphism,
/// split its characteristic polynomial into coprime factors (integer roots
/// and the rest) and restrict to the kernels of those factors. Candidates are
/// the End basis elements, then seeded random combinations. Summands are
/// ordered by serialized dimension vector. Throws SplittingFailed.
Decomposition decompose(const UnfoldedRep& v, std::uint64_t seed = kDefaultDecomposeSeed,
                        std::size_t retry_budget = 64);

nlohmann::json to_json(const UnfoldedRep& v);
UnfoldedRep rep_from_json(const nlohmann::json& j);

}  // namespace coxrep
