#pragma once

// Hochschild cohomology dimensions via four routes: the Koszul cochain
// complex, a relative bar-complex oracle, the graded two-term complex for
// Kronecker quivers, and closed-form evaluation.

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "stratakit/complex.hpp"
#include "stratakit/families.hpp"
#include "stratakit/quiver.hpp"

namespace stratakit {

struct HHProfile {
  std::map<int, Int> dims;  // degree -> dimension, zeros omitted
  std::string method;
  // extremal arrow degrees, recorded for graded profiles
  std::optional<int> min_arrow_degree, max_arrow_degree;

  Int at(int p) const {
    auto it = dims.find(p);
    return it == dims.end() ? Int(0) : it->second;
  }
  Int total() const {
    Int s = 0;
    for (const auto& [p, d] : dims) s += d;
    return s;
  }
  bool same_dims(const HHProfile& other) const { return dims == other.dims; }
};

namespace detail {

inline void profile_set(HHProfile& profile, int p, Int v) {
  if (v != 0) profile.dims[p] = std::move(v);
}

inline void require_ungraded(const QuiverPresentation& p) {
  if (p.is_graded())
    throw AlgebraError(ErrorCode::GradedInput,
                       "operation requires all arrow degrees to be zero");
}

}  // namespace detail

// Cochain spaces indexed by pairs (w, u): w a path of the quadratic dual in
// degree p, u an allowed path with the same endpoints.  The differential
// extends w by one dual arrow on either side and multiplies u by that arrow
// in the algebra, the right-hand extension weighted by (-1)^{p+1}.
inline CochainComplex koszul_cochain_complex(const QuiverPresentation& pres) {
  detail::require_ungraded(pres);
  PathBasis basis = enumerate_paths(pres);
  QuiverPresentation dual = quadratic_dual(pres);
  if (!is_finite_dimensional(dual))
    throw AlgebraError(ErrorCode::InfiniteDual,
                       "the quadratic dual is infinite-dimensional");
  PathBasis dual_basis = enumerate_paths(dual);

  index_t top = 0;
  for (const auto& w : dual_basis.paths()) top = std::max(top, w.length());

  // slots of C^p, grouped per dual path: offset[w] + (u - bucket begin)
  std::vector<std::vector<index_t>> degree_paths(
      static_cast<std::size_t>(top) + 1);
  for (index_t w = 0; w < dual_basis.dimension(); ++w)
    degree_paths[static_cast<std::size_t>(dual_basis.path(w).length())]
        .push_back(w);
  std::vector<index_t> slot_offset(
      static_cast<std::size_t>(dual_basis.dimension()), -1);
  std::vector<index_t> dims(static_cast<std::size_t>(top) + 1, 0);
  for (index_t p = 0; p <= top; ++p) {
    index_t off = 0;
    for (index_t w : degree_paths[static_cast<std::size_t>(p)]) {
      const Path& wp = dual_basis.path(w);
      slot_offset[static_cast<std::size_t>(w)] = off;
      off += basis.count(wp.source, wp.target);
    }
    dims[static_cast<std::size_t>(p)] = off;
  }
  auto slot_of = [&](index_t w, index_t u) {
    const Path& wp = dual_basis.path(w);
    auto range = basis.bucket_range(wp.source, wp.target);
    return slot_offset[static_cast<std::size_t>(w)] + (u - range.first);
  };

  CochainComplex cx;
  cx.dims = dims;
  cx.differentials.resize(static_cast<std::size_t>(top));
  const auto arrow_count = dual_basis.quiver_index().arrow_count();
  for (index_t p = 0; p < top; ++p) {
    auto& cols = cx.differentials[static_cast<std::size_t>(p)];
    cols.resize(static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]));
    const int right_sign = (p + 1) % 2 == 0 ? 1 : -1;
    for (index_t w : degree_paths[static_cast<std::size_t>(p)]) {
      const Path& wp = dual_basis.path(w);
      auto range = basis.bucket_range(wp.source, wp.target);
      for (index_t u = range.first; u < range.second; ++u) {
        std::map<index_t, Int> acc;
        for (std::int32_t rho = 0; rho < arrow_count; ++rho) {
          index_t rho_dual = dual_basis.arrow_path_index(rho);
          index_t rho_alg = basis.arrow_path_index(rho);
          if (auto w2 = dual_basis.product(rho_dual, w)) {
            if (auto u2 = basis.product(rho_alg, u))
              acc[slot_of(*w2, *u2)] += 1;
          }
          if (auto w2 = dual_basis.product(w, rho_dual)) {
            if (auto u2 = basis.product(u, rho_alg))
              acc[slot_of(*w2, *u2)] += right_sign;
          }
        }
        SparseZColumn col;
        for (auto& [row, val] : acc)
          if (val != 0) col.emplace_back(row, std::move(val));
        cols[static_cast<std::size_t>(slot_of(w, u))] = std::move(col);
      }
    }
  }
  return cx;
}

inline HHProfile hh_koszul(const QuiverPresentation& pres) {
  CochainComplex cx = koszul_cochain_complex(pres);
  std::vector<index_t> h = cohomology_dims(cx);
  HHProfile out;
  out.method = "koszul";
  for (std::size_t p = 0; p < h.size(); ++p)
    detail::profile_set(out, static_cast<int>(p), Int(h[p]));
  return out;
}

// ---------------------------------------------------------------------------
// Relative bar oracle.  Cochains in degree p assign, to each composable
// sequence of p nontrivial paths, an algebra element with the endpoints of
// the composite; the differential is the usual alternating sum of the two
// outer multiplications and the p-1 inner contractions.  Everything is
// graded by (total arrow count of the sequence) - (length of the value),
// and the differential preserves that grading, so ranks are computed
// blockwise.

namespace detail {

struct BarChain {
  std::vector<index_t> parts;  // path indices, first entry applied last
  std::int32_t source = 0, target = 0;
  index_t weight = 0;
};

struct IndexVecHash {
  std::size_t operator()(const std::vector<index_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

namespace detail {

// Shared construction for the bar complex: chains, slot indexing, and the
// sparse column of the differential at one cochain slot.
class BarMachine {
 public:
  BarMachine(const QuiverPresentation& pres, int p_max, index_t max_dim)
      : basis_(enumerate_paths(checked(pres, p_max))), p_max_(p_max) {
    const auto nv = basis_.quiver_index().vertex_count();
    check_cap(nv, max_dim);

    by_source_.resize(static_cast<std::size_t>(nv));
    by_target_.resize(static_cast<std::size_t>(nv));
    for (index_t i = 0; i < basis_.dimension(); ++i) {
      const Path& p = basis_.path(i);
      if (p.trivial()) continue;
      by_source_[static_cast<std::size_t>(p.source)].push_back(i);
      by_target_[static_cast<std::size_t>(p.target)].push_back(i);
    }

    chains_.resize(static_cast<std::size_t>(p_max) + 2);
    chain_id_.resize(static_cast<std::size_t>(p_max) + 2);
    for (std::int32_t v = 0; v < nv; ++v) {
      BarChain c;
      c.source = c.target = v;
      chain_id_[0][c.parts] = static_cast<index_t>(chains_[0].size());
      chains_[0].push_back(std::move(c));
    }
    for (int L = 1; L <= p_max + 1; ++L) {
      for (const auto& prev : chains_[static_cast<std::size_t>(L - 1)]) {
        // prepend a later part whose source is the chain's current target
        for (index_t w : by_source_[static_cast<std::size_t>(prev.target)]) {
          BarChain c;
          c.parts.reserve(prev.parts.size() + 1);
          c.parts.push_back(w);
          c.parts.insert(c.parts.end(), prev.parts.begin(), prev.parts.end());
          c.source = prev.source;
          c.target = basis_.path(w).target;
          c.weight = prev.weight + basis_.path(w).length();
          auto& level = chains_[static_cast<std::size_t>(L)];
          chain_id_[static_cast<std::size_t>(L)][c.parts] =
              static_cast<index_t>(level.size());
          level.push_back(std::move(c));
        }
      }
    }

    slot_offset_.resize(static_cast<std::size_t>(p_max) + 2);
    dims_.assign(static_cast<std::size_t>(p_max) + 2, 0);
    for (int L = 0; L <= p_max + 1; ++L) {
      auto& offs = slot_offset_[static_cast<std::size_t>(L)];
      index_t off = 0;
      for (const auto& c : chains_[static_cast<std::size_t>(L)]) {
        offs.push_back(off);
        off += basis_.count(c.source, c.target);
      }
      dims_[static_cast<std::size_t>(L)] = off;
    }
  }

  const PathBasis& basis() const { return basis_; }
  int p_max() const { return p_max_; }
  const std::vector<index_t>& dims() const { return dims_; }
  const std::vector<BarChain>& level(int L) const {
    return chains_[static_cast<std::size_t>(L)];
  }

  index_t slot_of(int L, index_t cid, index_t u) const {
    const auto& c = chains_[static_cast<std::size_t>(L)]
                           [static_cast<std::size_t>(cid)];
    auto range = basis_.bucket_range(c.source, c.target);
    return slot_offset_[static_cast<std::size_t>(L)]
                       [static_cast<std::size_t>(cid)] +
           (u - range.first);
  }

  // grading preserved by the differential: chain weight - value length
  index_t block_of(int L, index_t cid, index_t u) const {
    return chains_[static_cast<std::size_t>(L)][static_cast<std::size_t>(cid)]
               .weight -
           basis_.path(u).length();
  }

  // column of d^L at slot (cid, u), as (global slot of level L+1, value)
  std::map<index_t, Int> column(int L, index_t cid, index_t u) const {
    const auto& qi = basis_.quiver_index();
    const auto& c = chains_[static_cast<std::size_t>(L)]
                           [static_cast<std::size_t>(cid)];
    const auto& next_ids = chain_id_[static_cast<std::size_t>(L + 1)];
    const int right_sign = (L + 1) % 2 == 0 ? 1 : -1;
    std::map<index_t, Int> acc;
    // left multiplication by a prepended part
    for (index_t w : by_source_[static_cast<std::size_t>(c.target)]) {
      std::vector<index_t> parts;
      parts.reserve(c.parts.size() + 1);
      parts.push_back(w);
      parts.insert(parts.end(), c.parts.begin(), c.parts.end());
      index_t c2 = next_ids.at(parts);
      if (auto u2 = basis_.product(w, u)) acc[slot_of(L + 1, c2, *u2)] += 1;
    }
    // right multiplication by an appended part
    for (index_t w : by_target_[static_cast<std::size_t>(c.source)]) {
      std::vector<index_t> parts = c.parts;
      parts.push_back(w);
      index_t c2 = next_ids.at(parts);
      if (auto u2 = basis_.product(u, w))
        acc[slot_of(L + 1, c2, *u2)] += right_sign;
    }
    // inner contractions, seen from below: split part k into two factors
    for (std::size_t k = 0; k < c.parts.size(); ++k) {
      const Path& part = basis_.path(c.parts[k]);
      int sign = (k + 1) % 2 == 0 ? 1 : -1;
      for (index_t cut = 1; cut < part.length(); ++cut) {
        Path w1, w2;
        w1.arrows.assign(part.arrows.begin(), part.arrows.begin() + cut);
        w2.arrows.assign(part.arrows.begin() + cut, part.arrows.end());
        w1.target = part.target;
        w1.source = qi.src[static_cast<std::size_t>(w1.arrows.back())];
        w2.source = part.source;
        w2.target = qi.tgt[static_cast<std::size_t>(w2.arrows.front())];
        std::vector<index_t> parts;
        parts.reserve(c.parts.size() + 1);
        parts.insert(parts.end(), c.parts.begin(),
                     c.parts.begin() + static_cast<std::ptrdiff_t>(k));
        parts.push_back(*basis_.index_of(w1));
        parts.push_back(*basis_.index_of(w2));
        parts.insert(parts.end(),
                     c.parts.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                     c.parts.end());
        index_t c2 = next_ids.at(parts);
        acc[slot_of(L + 1, c2, u)] += sign;
      }
    }
    return acc;
  }

 private:
  static const QuiverPresentation& checked(const QuiverPresentation& pres,
                                           int p_max) {
    require_ungraded(pres);
    if (p_max < 0)
      throw AlgebraError(ErrorCode::DomainError, "p_max must be >= 0");
    return pres;
  }

  // transfer-matrix chain counts, to refuse oversized cochain spaces before
  // materializing anything
  void check_cap(std::int32_t nv, index_t max_dim) const {
    const auto n = static_cast<std::size_t>(nv);
    std::vector<std::vector<Int>> paths_st(n, std::vector<Int>(n));
    std::vector<std::vector<Int>> nontriv = paths_st;
    for (std::int32_t t = 0; t < nv; ++t)
      for (std::int32_t s = 0; s < nv; ++s) {
        Int c = basis_.count(s, t);
        paths_st[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = c;
        nontriv[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] =
            c - (s == t ? 1 : 0);
      }
    std::vector<std::vector<Int>> chain_count(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) chain_count[i][i] = 1;
    for (int L = 0; L <= p_max_ + 1; ++L) {
      if (L > 0) {
        std::vector<std::vector<Int>> next(n, std::vector<Int>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
              next[i][j] += nontriv[i][k] * chain_count[k][j];
        chain_count = std::move(next);
      }
      Int dim = 0;
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t s = 0; s < n; ++s)
          dim += chain_count[t][s] * paths_st[t][s];
      if (dim > max_dim)
        throw AlgebraError(ErrorCode::SizeLimit,
                           "cochain space at degree " + std::to_string(L) +
                               " has dimension " + dim.str() +
                               ", over the cap " + std::to_string(max_dim));
    }
  }

  PathBasis basis_;
  int p_max_;
  std::vector<std::vector<index_t>> by_source_, by_target_;
  std::vector<std::vector<BarChain>> chains_;
  std::vector<std::unordered_map<std::vector<index_t>, index_t, IndexVecHash>>
      chain_id_;
  std::vector<std::vector<index_t>> slot_offset_;
  std::vector<index_t> dims_;
};

}  // namespace detail

inline HHProfile hh_bar_oracle(const QuiverPresentation& pres, int p_max,
                               index_t max_dim = 200000) {
  detail::BarMachine machine(pres, p_max, max_dim);
  const PathBasis& basis = machine.basis();

  std::vector<index_t> ranks(static_cast<std::size_t>(p_max) + 1, 0);
  for (int L = 0; L <= p_max; ++L) {
    // rank of d^L, split along the preserved grading
    std::map<index_t, std::unordered_map<index_t, index_t>> row_maps;
    const auto& next_chains = machine.level(L + 1);
    for (index_t cid = 0; cid < static_cast<index_t>(next_chains.size());
         ++cid) {
      const auto& c = next_chains[static_cast<std::size_t>(cid)];
      auto range = basis.bucket_range(c.source, c.target);
      for (index_t u = range.first; u < range.second; ++u) {
        auto& m = row_maps[machine.block_of(L + 1, cid, u)];
        index_t id = static_cast<index_t>(m.size());
        m[machine.slot_of(L + 1, cid, u)] = id;
      }
    }
    std::map<index_t, std::vector<SparseZColumn>> block_cols;
    const auto& cur = machine.level(L);
    for (index_t cid = 0; cid < static_cast<index_t>(cur.size()); ++cid) {
      const auto& c = cur[static_cast<std::size_t>(cid)];
      auto range = basis.bucket_range(c.source, c.target);
      for (index_t u = range.first; u < range.second; ++u) {
        std::map<index_t, Int> acc = machine.column(L, cid, u);
        index_t q = machine.block_of(L, cid, u);
        SparseZColumn col;
        for (auto& [row, val] : acc) {
          if (val == 0) continue;
          col.emplace_back(row_maps[q].at(row), std::move(val));
        }
        std::sort(
            col.begin(), col.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
        block_cols[q].push_back(std::move(col));
      }
    }
    index_t total = 0;
    for (auto& [q, cols] : block_cols) {
      index_t rows = static_cast<index_t>(row_maps[q].size());
      if (rows == 0) continue;
      total += integer_column_rank(rows, cols);
    }
    ranks[static_cast<std::size_t>(L)] = total;
  }

  const auto& dims = machine.dims();
  HHProfile out;
  out.method = "bar";
  for (int p = 0; p <= p_max; ++p) {
    Int h = Int(dims[static_cast<std::size_t>(p)]) -
            ranks[static_cast<std::size_t>(p)];
    if (p > 0) h -= ranks[static_cast<std::size_t>(p - 1)];
    detail::profile_set(out, p, h);
  }
  return out;
}

// Full bar complex with global slot indexing; the oracle only needs ranks,
// this exists so the d^2 = 0 invariant can be asserted on small algebras.
inline CochainComplex bar_cochain_complex(const QuiverPresentation& pres,
                                          int p_max,
                                          index_t max_dim = 200000) {
  detail::BarMachine machine(pres, p_max, max_dim);
  const PathBasis& basis = machine.basis();
  CochainComplex cx;
  cx.dims = machine.dims();
  cx.differentials.resize(static_cast<std::size_t>(p_max) + 1);
  for (int L = 0; L <= p_max; ++L) {
    auto& cols = cx.differentials[static_cast<std::size_t>(L)];
    cols.resize(
        static_cast<std::size_t>(machine.dims()[static_cast<std::size_t>(L)]));
    const auto& cur = machine.level(L);
    for (index_t cid = 0; cid < static_cast<index_t>(cur.size()); ++cid) {
      const auto& c = cur[static_cast<std::size_t>(cid)];
      auto range = basis.bucket_range(c.source, c.target);
      for (index_t u = range.first; u < range.second; ++u) {
        std::map<index_t, Int> acc = machine.column(L, cid, u);
        SparseZColumn col;
        for (auto& [row, val] : acc)
          if (val != 0) col.emplace_back(row, std::move(val));
        cols[static_cast<std::size_t>(machine.slot_of(L, cid, u))] =
            std::move(col);
      }
    }
  }
  return cx;
}

// ---------------------------------------------------------------------------
// Graded Kronecker quivers.

// Extracts the degree multiset from a presentation that must be a Kronecker
// quiver: two vertices, every arrow from the first to the second, no
// relations.
inline std::vector<int> kronecker_degrees(const QuiverPresentation& p) {
  if (p.vertices.size() != 2)
    throw AlgebraError(ErrorCode::DomainError,
                       "Kronecker form requires exactly two vertices");
  std::vector<int> out;
  for (const auto& a : p.arrows) {
    if (a.source != p.vertices[0] || a.target != p.vertices[1])
      throw AlgebraError(ErrorCode::DomainError,
                         "Kronecker form requires all arrows from the first "
                         "vertex to the second");
    out.push_back(a.degree);
  }
  if (!p.relations.empty())
    throw AlgebraError(ErrorCode::DomainError,
                       "Kronecker form admits no relations");
  std::sort(out.begin(), out.end());
  return out;
}

// Builds the two-term complex: position 0 holds the two vertex idempotents
// in internal degree 0; position 1 holds one slot per ordered arrow pair
// (alpha, rho) in internal degree deg alpha - deg rho.  The differential
// sends e_1 to the sum of the diagonal slots and e_2 to its negative.
inline HHProfile hh_graded_kronecker(std::vector<int> degree_multiset) {
  std::sort(degree_multiset.begin(), degree_multiset.end());
  const auto n = static_cast<index_t>(degree_multiset.size());
  GradedTwoTermComplex cx;
  cx.degrees0 = {0, 0};
  for (index_t a = 0; a < n; ++a)
    for (index_t r = 0; r < n; ++r)
      cx.degrees1.push_back(degree_multiset[static_cast<std::size_t>(a)] -
                            degree_multiset[static_cast<std::size_t>(r)]);
  SparseZColumn diag;
  for (index_t r = 0; r < n; ++r) diag.emplace_back(r * n + r, 1);
  SparseZColumn neg;
  for (const auto& [row, val] : diag) neg.emplace_back(row, -val);
  cx.g = {diag, neg};
  HHProfile out;
  out.method = "graded-two-term";
  out.dims = cx.cohomology_by_total_degree();
  if (n > 0) {
    out.min_arrow_degree = degree_multiset.front();
    out.max_arrow_degree = degree_multiset.back();
  }
  return out;
}

inline HHProfile hh_graded_kronecker(const QuiverPresentation& p) {
  return hh_graded_kronecker(kronecker_degrees(p));
}

// Closed form for the same profile: with D the multiset of ordered-pair
// degree differences, dim HH^0 = #{D = -1} + 1, dim HH^1 = #{D = 0} - 1,
// and dim HH^p = #{D = p-1} otherwise; empty quiver gives {0:2}.
inline HHProfile hh_kronecker_formula(std::vector<int> degree_multiset) {
  std::sort(degree_multiset.begin(), degree_multiset.end());
  HHProfile out;
  out.method = "formula";
  if (degree_multiset.empty()) {
    out.dims[0] = 2;
    return out;
  }
  out.min_arrow_degree = degree_multiset.front();
  out.max_arrow_degree = degree_multiset.back();
  std::map<int, Int> diff_count;
  for (int a : degree_multiset)
    for (int r : degree_multiset) ++diff_count[a - r];
  std::map<int, Int> dims;
  for (const auto& [delta, count] : diff_count) dims[delta + 1] += count;
  dims[0] += 1;
  dims[1] -= 1;
  for (const auto& [p, d] : dims) detail::profile_set(out, p, d);
  return out;
}

// Closed form for the top cohomology dimension of the alternating family.
// n even: the top cochain space has dimension F_{n-1}(ys, shift(xs)) times
// the product of all x_i y_i and the incoming differential vanishes.
// n odd: the cochain space has dimension D = F_{n+1}(xs, ys) N with
// N = x_{(n+1)/2} * prod_{i<=(n-1)/2} x_i y_i the number of top dual paths.
// The incoming differential pairs each cochain with the two length n-1
// dual paths obtained by dropping the first or last arrow of a top dual
// path; only the identity component of the coefficient survives either
// composition, so the image has one independent direction per truncated
// dual path: rank = N/x_1 + N/x_{(n+1)/2}.
inline Int hh_top_formula(long long n, const IntSeq& xs, const IntSeq& ys) {
  if (n < 2)
    throw AlgebraError(ErrorCode::DomainError,
                       "top-degree formula requires n >= 2");
  const auto N = static_cast<std::size_t>(n);
  if (n % 2 == 0) {
    FibonacciSeq f = fibonacci(ys, shift(xs), N - 1);
    if (xs.size() < N / 2 || ys.size() < N / 2)
      throw AlgebraError(ErrorCode::DomainError,
                         "parameter sequences too short for requested index");
    Int prod = 1;
    for (std::size_t i = 0; i < N / 2; ++i)
      prod *= Int(xs[i]) * Int(ys[i]);
    return f.F(N - 1) * prod;
  }
  FibonacciSeq f = fibonacci(xs, ys, N + 1);
  if (xs.size() < (N + 1) / 2 || ys.size() < (N - 1) / 2)
    throw AlgebraError(ErrorCode::DomainError,
                       "parameter sequences too short for requested index");
  Int prod = 1;
  for (std::size_t i = 0; i < (N - 1) / 2; ++i)
    prod *= Int(xs[i]) * Int(ys[i]);
  const Int top_dual = Int(xs[(N + 1) / 2 - 1]) * prod;
  const Int image_rank = top_dual / Int(xs[0]) + prod;
  return f.F(N + 1) * top_dual - image_rank;
}

}  // namespace stratakit
