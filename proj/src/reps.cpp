#include "coxrep/reps.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <tuple>

namespace coxrep {

namespace {

using ArrowKey = std::tuple<int, std::size_t, std::size_t>;

std::map<ArrowKey, std::size_t> arrow_lookup(const UnfoldedQuiver& uq) {
  std::map<ArrowKey, std::size_t> out;
  for (std::size_t k = 0; k < uq.arrows().size(); ++k) {
    const auto& a = uq.arrows()[k];
    out.emplace(ArrowKey{a.provenance, a.source, a.target}, k);
  }
  return out;
}

std::size_t to_size(long d) { return static_cast<std::size_t>(d); }

void require_same_quiver(const UnfoldedRep& v, const UnfoldedRep& w) {
  if (!(v.base() == w.base())) throw Error(ErrorKind::MismatchedQuiver, "representations over different quivers");
}

}  // namespace

UnfoldedRep::UnfoldedRep(UnfoldedQuiver quiver, std::vector<long> dims, std::vector<RationalMatrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.size() != quiver_.vertices().size()) {
    throw Error(ErrorKind::ShapeMismatch, "expected one dimension per unfolded vertex");
  }
  if (maps_.size() != quiver_.arrows().size()) {
    throw Error(ErrorKind::ShapeMismatch, "expected one matrix per unfolded arrow");
  }
  for (long d : dims_) {
    if (d < 0) throw Error(ErrorKind::ShapeMismatch, "negative dimension");
  }
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const auto& a = quiver_.arrows()[k];
    if (maps_[k].rows() != to_size(dims_[a.target]) || maps_[k].cols() != to_size(dims_[a.source])) {
      throw Error(ErrorKind::ShapeMismatch, "matrix of arrow " + std::to_string(a.id) + " has the wrong shape");
    }
  }
}

UnfoldedRep UnfoldedRep::zero(UnfoldedQuiver quiver) {
  std::vector<long> dims(quiver.vertices().size(), 0);
  std::vector<RationalMatrix> maps(quiver.arrows().size());
  return UnfoldedRep(std::move(quiver), std::move(dims), std::move(maps));
}

long UnfoldedRep::total_dim() const {
  long out = 0;
  for (long d : dims_) out += d;
  return out;
}

UnfoldedRep simple_rep(const CoxeterQuiver& q, int vertex, const SimpleObject& simple) {
  auto uq = unfold(q);
  std::vector<long> dims(uq.vertices().size(), 0);
  dims[uq.index_of(simple, vertex)] = 1;
  std::vector<RationalMatrix> maps;
  for (const auto& a : uq.arrows()) maps.emplace_back(to_size(dims[a.target]), to_size(dims[a.source]));
  return UnfoldedRep(std::move(uq), std::move(dims), std::move(maps));
}

RootVector dim_vector(const UnfoldedRep& v) { return fold_dim(v.quiver(), v.dims()); }

UnfoldedRep direct_sum(const UnfoldedRep& a, const UnfoldedRep& b) {
  require_same_quiver(a, b);
  std::vector<long> dims(a.dims().size());
  for (std::size_t k = 0; k < dims.size(); ++k) dims[k] = a.dims()[k] + b.dims()[k];
  std::vector<RationalMatrix> maps;
  for (std::size_t k = 0; k < a.maps().size(); ++k) maps.push_back(block_diagonal({a.maps()[k], b.maps()[k]}));
  return UnfoldedRep(a.quiver(), std::move(dims), std::move(maps));
}

UnfoldedRep reflect_plus(int vertex, const UnfoldedRep& v) {
  const auto& q = v.base();
  if (!q.is_sink(vertex)) throw Error(ErrorKind::NotASink, "vertex " + std::to_string(vertex) + " is not a sink");
  const auto& uq = v.quiver();
  auto reflected = unfold(reverse_at(q, vertex));
  const auto new_lookup = arrow_lookup(reflected);

  auto dims = v.dims();
  std::vector<RationalMatrix> maps(reflected.arrows().size());
  std::vector<bool> filled(maps.size(), false);

  for (std::size_t u : uq.fibre(vertex)) {
    std::vector<std::size_t> incoming;
    std::vector<RationalMatrix> blocks;
    for (std::size_t k = 0; k < uq.arrows().size(); ++k) {
      if (uq.arrows()[k].target == u) {
        incoming.push_back(k);
        blocks.push_back(v.maps()[k]);
      }
    }
    const auto xi = hstack(blocks, to_size(v.dims()[u]));
    const auto kernel = kernel_basis(xi);
    const auto newdim = kernel.cols();
    dims[u] = static_cast<long>(newdim);
    std::size_t offset = 0;
    for (std::size_t k : incoming) {
      const auto& a = uq.arrows()[k];
      const auto width = to_size(v.dims()[a.source]);
      const auto idx = new_lookup.at(ArrowKey{a.provenance, u, a.source});
      maps[idx] = kernel.block(offset, 0, width, newdim);
      filled[idx] = true;
      offset += width;
    }
  }
  const auto old_lookup = arrow_lookup(uq);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (filled[k]) continue;
    const auto& a = reflected.arrows()[k];
    maps[k] = v.maps()[old_lookup.at(ArrowKey{a.provenance, a.source, a.target})];
  }
  return UnfoldedRep(std::move(reflected), std::move(dims), std::move(maps));
}

UnfoldedRep reflect_minus(int vertex, const UnfoldedRep& v) {
  const auto& q = v.base();
  if (!q.is_source(vertex)) throw Error(ErrorKind::NotASource, "vertex " + std::to_string(vertex) + " is not a source");
  const auto& uq = v.quiver();
  auto reflected = unfold(reverse_at(q, vertex));
  const auto new_lookup = arrow_lookup(reflected);

  auto dims = v.dims();
  std::vector<RationalMatrix> maps(reflected.arrows().size());
  std::vector<bool> filled(maps.size(), false);

  for (std::size_t u : uq.fibre(vertex)) {
    std::vector<std::size_t> outgoing;
    std::vector<RationalMatrix> blocks;
    for (std::size_t k = 0; k < uq.arrows().size(); ++k) {
      if (uq.arrows()[k].source == u) {
        outgoing.push_back(k);
        blocks.push_back(v.maps()[k]);
      }
    }
    const auto theta = vstack(blocks, to_size(v.dims()[u]));
    const auto proj = cokernel_projection(theta);
    const auto newdim = proj.rows();
    dims[u] = static_cast<long>(newdim);
    std::size_t offset = 0;
    for (std::size_t k : outgoing) {
      const auto& a = uq.arrows()[k];
      const auto height = to_size(v.dims()[a.target]);
      const auto idx = new_lookup.at(ArrowKey{a.provenance, a.target, u});
      maps[idx] = proj.block(0, offset, newdim, height);
      filled[idx] = true;
      offset += height;
    }
  }
  const auto old_lookup = arrow_lookup(uq);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (filled[k]) continue;
    const auto& a = reflected.arrows()[k];
    maps[k] = v.maps()[old_lookup.at(ArrowKey{a.provenance, a.source, a.target})];
  }
  return UnfoldedRep(std::move(reflected), std::move(dims), std::move(maps));
}

UnfoldedRep apply_word(const ReflectionWord& word, UnfoldedRep v) {
  for (const auto& step : word) {
    v = step.sign == ReflectionSign::Plus ? reflect_plus(step.vertex, v) : reflect_minus(step.vertex, v);
  }
  return v;
}

namespace {

// Unknowns: f_u is dims_w[u] x dims_v[u], row-major, stacked over u.
// Rows: W_b f_s - f_t V_b = 0 for every arrow b: s -> t.
RationalMatrix commuting_system(const UnfoldedRep& v, const UnfoldedRep& w, std::vector<std::size_t>& offsets) {
  const auto& uq = v.quiver();
  const auto nv = uq.vertices().size();
  offsets.assign(nv + 1, 0);
  for (std::size_t u = 0; u < nv; ++u) offsets[u + 1] = offsets[u] + to_size(w.dims()[u] * v.dims()[u]);

  std::size_t equations = 0;
  for (const auto& a : uq.arrows()) equations += to_size(w.dims()[a.target] * v.dims()[a.source]);

  RationalMatrix system(equations, offsets[nv]);
  std::size_t row = 0;
  for (std::size_t k = 0; k < uq.arrows().size(); ++k) {
    const auto& a = uq.arrows()[k];
    const auto s = a.source;
    const auto t = a.target;
    const auto& wb = w.maps()[k];
    const auto& vb = v.maps()[k];
    const auto vs = to_size(v.dims()[s]);
    const auto ws = to_size(w.dims()[s]);
    const auto vt = to_size(v.dims()[t]);
    const auto wt = to_size(w.dims()[t]);
    for (std::size_t r = 0; r < wt; ++r) {
      for (std::size_t c = 0; c < vs; ++c, ++row) {
        for (std::size_t m = 0; m < ws; ++m) {
          if (sgn(wb(r, m)) != 0) system(row, offsets[s] + m * vs + c) += wb(r, m);
        }
        for (std::size_t m = 0; m < vt; ++m) {
          if (sgn(vb(m, c)) != 0) system(row, offsets[t] + r * vt + m) -= vb(m, c);
        }
      }
    }
  }
  return system;
}

}  // namespace

std::vector<std::vector<RationalMatrix>> hom_basis(const UnfoldedRep& v, const UnfoldedRep& w) {
  require_same_quiver(v, w);
  std::vector<std::size_t> offsets;
  const auto system = commuting_system(v, w, offsets);
  const auto kernel = kernel_basis(system);
  const auto nv = v.dims().size();
  std::vector<std::vector<RationalMatrix>> out;
  for (std::size_t col = 0; col < kernel.cols(); ++col) {
    std::vector<RationalMatrix> f;
    for (std::size_t u = 0; u < nv; ++u) {
      const auto rows = to_size(w.dims()[u]);
      const auto cols = to_size(v.dims()[u]);
      RationalMatrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = kernel(offsets[u] + r * cols + c, col);
      }
      f.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const UnfoldedRep& v, const UnfoldedRep& w) {
  require_same_quiver(v, w);
  std::vector<std::size_t> offsets;
  const auto system = commuting_system(v, w, offsets);
  return system.cols() - rank(system);
}

std::size_t end_dim(const UnfoldedRep& v) {
  std::vector<std::size_t> offsets;
  const auto system = commuting_system(v, v, offsets);
  const auto solution = solve_all(system, RationalMatrix(system.rows(), 1));
  return solution.nullspace.cols();
}

namespace {

// If v is [A] e_i for a single simple A, returns A.
std::optional<SimpleObject> as_scaled_simple_root(const RootVector& v, int vertex) {
  if (v.entries().size() != 1) return std::nullopt;
  const auto& [i, x] = *v.entries().begin();
  if (i != vertex || x.terms().size() != 1) return std::nullopt;
  const auto& [simple, coeff] = *x.terms().begin();
  if (coeff != 1) return std::nullopt;
  return simple;
}

}  // namespace

IndecomposableConstruction construct_indecomposable(const CoxeterQuiver& q, const RootVector& root) {
  const RootSystem rs(q);
  rs.check(root);
  if (!is_positive_vec(root)) throw Error(ErrorKind::NotAnExtendedRoot, root.to_string() + " is not positive");
  const auto ordering = admissible_sink_ordering(q);
  const auto n = ordering.size();
  // Every positive root is sent to a negative one by a bounded power of c;
  // the cap only guards against misuse on infinite type.
  const std::size_t cap = n * 512;

  RootVector cur = root;
  std::size_t t = 0;
  std::optional<SimpleObject> simple;
  for (; t < cap; ++t) {
    const int vertex = ordering[t % n];
    simple = as_scaled_simple_root(cur, vertex);
    if (simple) break;
    cur = rs.reflect(vertex, cur);
    if (!is_positive_vec(cur)) {
      throw Error(ErrorKind::NotAnExtendedRoot, root.to_string() + " is not an extended positive root");
    }
  }
  if (!simple) throw Error(ErrorKind::CapExceeded, "no simple reached for " + root.to_string());

  IndecomposableConstruction out;
  out.coxeter_power = t / n;
  out.prefix_length = t % n;
  out.start_vertex = ordering[out.prefix_length];
  out.simple = *simple;

  CoxeterQuiver start = q;
  for (std::size_t j = 0; j < out.prefix_length; ++j) start = reverse_at(start, ordering[j]);
  for (std::size_t j = out.prefix_length; j-- > 0;) out.word.push_back({ordering[j], ReflectionSign::Minus});
  for (std::size_t r = 0; r < out.coxeter_power; ++r) {
    for (std::size_t j = n; j-- > 0;) out.word.push_back({ordering[j], ReflectionSign::Minus});
  }
  out.rep = apply_word(out.word, simple_rep(start, out.start_vertex, out.simple));
  if (!(out.rep.base() == q) || !(dim_vector(out.rep) == root)) {
    throw Error(ErrorKind::Internal, "reflection word did not reproduce " + root.to_string());
  }
  return out;
}

UnfoldedRep indecomposable_for(const CoxeterQuiver& q, const RootVector& root, std::size_t budget) {
  if (!is_finite_type(q)) throw Error(ErrorKind::NotFiniteType, "quiver is not of finite type");
  const RootSystem rs(q);
  rs.check(root);
  if (!rs.extended_positive_roots(budget).contains(root)) {
    throw Error(ErrorKind::NotAnExtendedRoot, root.to_string() + " is not an extended positive root");
  }
  auto built = construct_indecomposable(q, root);
  if (end_dim(built.rep) != 1) throw Error(ErrorKind::Internal, "constructed representation is not a brick");
  return std::move(built.rep);
}

std::vector<UnfoldedRep> enumerate_indecomposables(const CoxeterQuiver& q, std::size_t budget) {
  if (!is_finite_type(q)) throw Error(ErrorKind::NotFiniteType, "quiver is not of finite type");
  const RootSystem rs(q);
  const auto roots = rs.extended_positive_roots(budget).roots;
  std::vector<UnfoldedRep> out(roots.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < roots.size(); ++k) {
    try {
      auto built = construct_indecomposable(q, roots[k]);
      if (end_dim(built.rep) != 1) throw Error(ErrorKind::Internal, "constructed representation is not a brick");
      out[k] = std::move(built.rep);
    } catch (...) {
#pragma omp critical(coxrep_indec_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

namespace {

using Endo = std::vector<RationalMatrix>;

mpz_class lcm_of_denominators(const Endo& f) {
  mpz_class out = 1;
  for (const auto& m : f) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
  }
  return out;
}

RationalPolynomial poly_mul(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

mpq_class poly_eval(const RationalPolynomial& p, const mpq_class& x) {
  mpq_class out = 0;
  for (std::size_t k = p.size(); k-- > 0;) out = out * x + p[k];
  return out;
}

// Divides by (x - root); p(root) must be zero.
RationalPolynomial divide_linear(const RationalPolynomial& p, const mpq_class& root) {
  RationalPolynomial out(p.size() - 1);
  mpq_class carry = 0;
  for (std::size_t k = p.size(); k-- > 1;) {
    carry = carry * root + p[k];
    out[k - 1] = carry;
  }
  return out;
}

// Pairwise coprime monic factors of the characteristic polynomial of the
// integer endomorphism f: one (x - l)^m per integer eigenvalue l, plus the
// remaining factor if nonconstant.
std::vector<RationalPolynomial> coprime_factors(const Endo& f) {
  RationalPolynomial p{1};
  mpz_class bound = 0;
  for (const auto& m : f) {
    if (m.rows() == 0) continue;
    p = poly_mul(p, characteristic_polynomial(m));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      mpz_class row = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) row += abs(m(r, c).get_num());
      bound = std::max(bound, row);
    }
  }
  std::vector<RationalPolynomial> out;
  for (mpz_class l = -bound; l <= bound; ++l) {
    const mpq_class root(l);
    std::size_t mult = 0;
    while (p.size() > 1 && sgn(poly_eval(p, root)) == 0) {
      p = divide_linear(p, root);
      ++mult;
    }
    if (mult == 0) continue;
    RationalPolynomial block{1};
    for (std::size_t k = 0; k < mult; ++k) block = poly_mul(block, RationalPolynomial{-root, 1});
    out.push_back(std::move(block));
  }
  if (p.size() > 1) out.push_back(std::move(p));
  return out;
}

// Restriction of v to the subrepresentation spanned per vertex by the
// columns of basis[u]; the subspaces must be stable under every arrow.
UnfoldedRep restrict_to(const UnfoldedRep& v, const std::vector<RationalMatrix>& basis) {
  const auto& uq = v.quiver();
  std::vector<long> dims;
  for (const auto& b : basis) dims.push_back(static_cast<long>(b.cols()));
  std::vector<RationalMatrix> maps;
  for (std::size_t k = 0; k < uq.arrows().size(); ++k) {
    const auto& a = uq.arrows()[k];
    const auto image = v.maps()[k] * basis[a.source];
    maps.push_back(solve_all(basis[a.target], image).particular);
  }
  return UnfoldedRep(uq, std::move(dims), std::move(maps));
}

struct Splitter {
  std::mt19937_64 rng;
  std::uint64_t seed;
  std::size_t retry_budget;
  std::vector<UnfoldedRep> leaves;

  bool try_split(const UnfoldedRep& v, const Endo& candidate) {
    auto f = candidate;
    const auto scale = lcm_of_denominators(f);
    for (auto& m : f) m *= mpq_class(scale);
    const auto factors = coprime_factors(f);
    if (factors.size() < 2) return false;
    for (const auto& g : factors) {
      std::vector<RationalMatrix> basis;
      for (const auto& m : f) basis.push_back(kernel_basis(evaluate_polynomial(g, m)));
      split(restrict_to(v, basis));
    }
    return true;
  }

  void split(const UnfoldedRep& v) {
    if (v.total_dim() == 0) return;
    const auto basis = hom_basis(v, v);
    if (basis.size() == 1) {
      leaves.push_back(v);
      return;
    }
    for (const auto& f : basis) {
      if (try_split(v, f)) return;
    }
    for (std::size_t attempt = 0; attempt < retry_budget; ++attempt) {
      Endo f;
      for (const auto& m : basis[0]) f.emplace_back(m.rows(), m.cols());
      for (const auto& b : basis) {
        const mpq_class coeff(static_cast<long>(rng() % 7) - 3);
        for (std::size_t u = 0; u < f.size(); ++u) f[u] += b[u] * coeff;
      }
      if (try_split(v, f)) return;
    }
    throw Error(ErrorKind::SplittingFailed,
                "no splitting endomorphism found (seed " + std::to_string(seed) + ")");
  }
};

}  // namespace

Decomposition decompose(const UnfoldedRep& v, std::uint64_t seed, std::size_t retry_budget) {
  Splitter splitter{std::mt19937_64(seed), seed, retry_budget, {}};
  splitter.split(v);
  for (const auto& leaf : splitter.leaves) {
    if (end_dim(leaf) != 1) throw Error(ErrorKind::Internal, "summand is not a brick");
  }
  auto leaves = std::move(splitter.leaves);
  std::stable_sort(leaves.begin(), leaves.end(), [](const UnfoldedRep& a, const UnfoldedRep& b) {
    return dim_vector(a).serialize() < dim_vector(b).serialize();
  });
  return Decomposition{std::move(leaves), seed};
}

nlohmann::json to_json(const UnfoldedRep& v) {
  const auto& uq = v.quiver();
  nlohmann::json dims = nlohmann::json::object();
  for (std::size_t u = 0; u < uq.vertices().size(); ++u) {
    if (v.dims()[u] != 0) dims[uq.vertices()[u].name()] = v.dims()[u];
  }
  nlohmann::json maps = nlohmann::json::array();
  for (std::size_t k = 0; k < uq.arrows().size(); ++k) {
    const auto& a = uq.arrows()[k];
    if (v.maps()[k].empty()) continue;
    maps.push_back({{"provenance", a.provenance},
                    {"source", uq.vertices()[a.source].name()},
                    {"target", uq.vertices()[a.target].name()},
                    {"matrix", to_json(v.maps()[k])}});
  }
  return {{"quiver", to_json(uq.base())}, {"dims", dims}, {"maps", maps}};
}

UnfoldedRep rep_from_json(const nlohmann::json& j) {
  try {
    auto uq = unfold(quiver_from_json(j.at("quiver")));
    std::map<std::string, std::size_t> by_name;
    for (std::size_t u = 0; u < uq.vertices().size(); ++u) by_name.emplace(uq.vertices()[u].name(), u);
    auto index = [&](const std::string& name) {
      auto it = by_name.find(name);
      if (it == by_name.end()) throw Error(ErrorKind::Parse, "unknown unfolded vertex " + name);
      return it->second;
    };

    std::vector<long> dims(uq.vertices().size(), 0);
    for (const auto& [name, d] : j.at("dims").items()) dims[index(name)] = d.get<long>();

    std::vector<RationalMatrix> maps;
    for (const auto& a : uq.arrows()) maps.emplace_back(to_size(dims[a.target]), to_size(dims[a.source]));
    const auto lookup = arrow_lookup(uq);
    if (j.contains("maps")) {
      for (const auto& m : j.at("maps")) {
        const ArrowKey key{m.at("provenance").get<int>(), index(m.at("source").get<std::string>()),
                           index(m.at("target").get<std::string>())};
        auto it = lookup.find(key);
        if (it == lookup.end()) throw Error(ErrorKind::Parse, "matrix given for an arrow not in the unfolding");
        maps[it->second] = matrix_from_json(m.at("matrix"));
      }
    }
    return UnfoldedRep(std::move(uq), std::move(dims), std::move(maps));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace coxrep
