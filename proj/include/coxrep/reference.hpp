#pragma once

#include <cstddef>
#include <vector>

#include "coxrep/path_algebra.hpp"
#include "coxrep/quiver.hpp"
#include "coxrep/reps.hpp"
#include "coxrep/rootsys.hpp"
#include "coxrep/unfold.hpp"

/// Straightforward serial versions of the parallel kernels. They share no
/// inner loops with the fast paths and exist for cross-checking and
/// benchmarking.
namespace coxrep::reference {

/// Tests every pair of simples against the fusion multiplicity of
/// Pi_{n-3} (x) B for every arrow.
UnfoldedQuiver unfold(const CoxeterQuiver& q);

/// Plain queue breadth-first search of the orbit of the simple roots.
RootSet root_orbit(const RootSystem& rs, std::size_t budget = kDefaultRootBudget);
RootSet positive_roots(const RootSystem& rs, std::size_t budget = kDefaultRootBudget);

std::vector<UnfoldedRep> enumerate_indecomposables(const CoxeterQuiver& q,
                                                   std::size_t budget = kDefaultRootBudget);

/// Grows paths one arrow at a time from the idempotents.
std::vector<Path> enumerate_paths(const CoxeterQuiver& q, std::size_t length);

}  // namespace coxrep::reference
