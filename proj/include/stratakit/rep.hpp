#pragma once

// Right modules over a finite-dimensional presentation: Hom and Ext spaces,
// minimal projective resolutions, socle/top/radical, heredity-ideal and
// quasi-heredity checks, and the two-vertex tilting construction.
//
// Convention: the arrow a: i -> j acts by a matrix from the vertex-j
// component to the vertex-i component (elements move against the arrow when
// multiplied on the right).  For a relation (b, a) the composite
// act(a) . act(b) vanishes.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stratakit/families.hpp"
#include "stratakit/matrix.hpp"
#include "stratakit/quiver.hpp"

namespace stratakit {

struct Representation {
  std::vector<index_t> dims;            // per vertex
  std::vector<RationalMatrix> actions;  // per arrow

  index_t total_dim() const {
    index_t s = 0;
    for (auto d : dims) s += d;
    return s;
  }
  bool is_zero() const { return total_dim() == 0; }
};

// A map of representations M -> N, one matrix per vertex.
struct ModuleMap {
  std::vector<RationalMatrix> vertex_maps;
};

inline Representation zero_rep(const PathBasis& A) {
  const auto& qi = A.quiver_index();
  Representation r;
  r.dims.assign(static_cast<std::size_t>(qi.vertex_count()), 0);
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a)
    r.actions.emplace_back(0, 0);
  return r;
}

inline Representation simple_rep(const PathBasis& A, std::int32_t vertex) {
  const auto& qi = A.quiver_index();
  Representation r = zero_rep(A);
  r.dims[static_cast<std::size_t>(vertex)] = 1;
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    auto s = static_cast<std::size_t>(qi.src[static_cast<std::size_t>(a)]);
    auto t = static_cast<std::size_t>(qi.tgt[static_cast<std::size_t>(a)]);
    r.actions[static_cast<std::size_t>(a)] =
        RationalMatrix(r.dims[s], r.dims[t]);
  }
  return r;
}

// Shape and relation check; every constructor below satisfies it.
inline bool verify_representation(const PathBasis& A,
                                  const Representation& R) {
  const auto& qi = A.quiver_index();
  if (R.dims.size() != static_cast<std::size_t>(qi.vertex_count()) ||
      R.actions.size() != static_cast<std::size_t>(qi.arrow_count()))
    return false;
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    const auto& m = R.actions[static_cast<std::size_t>(a)];
    auto s = static_cast<std::size_t>(qi.src[static_cast<std::size_t>(a)]);
    auto t = static_cast<std::size_t>(qi.tgt[static_cast<std::size_t>(a)]);
    if (m.rows() != R.dims[s] || m.cols() != R.dims[t]) return false;
  }
  for (const auto& [later, earlier] : A.presentation().relations) {
    auto b = qi.arrow_id.at(later);
    auto a = qi.arrow_id.at(earlier);
    RationalMatrix comp = R.actions[static_cast<std::size_t>(a)] *
                          R.actions[static_cast<std::size_t>(b)];
    if (!comp.is_zero()) return false;
  }
  return true;
}

inline bool verify_module_map(const PathBasis& A, const Representation& M,
                              const Representation& N, const ModuleMap& f) {
  const auto& qi = A.quiver_index();
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    auto s = static_cast<std::size_t>(qi.src[static_cast<std::size_t>(a)]);
    auto t = static_cast<std::size_t>(qi.tgt[static_cast<std::size_t>(a)]);
    RationalMatrix lhs =
        f.vertex_maps[s] * M.actions[static_cast<std::size_t>(a)];
    RationalMatrix rhs =
        N.actions[static_cast<std::size_t>(a)] * f.vertex_maps[t];
    if (lhs != rhs) return false;
  }
  return true;
}

// Right action of a path: compose the arrow actions from the last-written
// (first-applied) arrow outward.
inline void apply_path_to_vector(const PathBasis& A, const Representation& R,
                                 const Path& path, SparseQColumn& vec) {
  (void)A;
  for (auto it = path.arrows.begin(); it != path.arrows.end(); ++it)
    vec = R.actions[static_cast<std::size_t>(*it)].apply(vec);
}

inline RationalMatrix apply_path(const PathBasis& A, const Representation& R,
                                 const Path& path) {
  RationalMatrix m = RationalMatrix::identity(
      R.dims[static_cast<std::size_t>(path.target)]);
  for (auto a : path.arrows)
    m = R.actions[static_cast<std::size_t>(a)] * m;
  (void)A;
  return m;
}

namespace detail {

// Representations whose vertex-v basis is a sublist of the allowed paths
// with source v share this constructor: `member` picks the paths, `kill`
// additionally zeroes products that leave the chosen set (for quotients).
inline Representation paths_rep(const PathBasis& A,
                                const std::vector<bool>& member, bool kill) {
  const auto& qi = A.quiver_index();
  const auto nv = qi.vertex_count();
  Representation r;
  r.dims.assign(static_cast<std::size_t>(nv), 0);
  std::vector<index_t> local(static_cast<std::size_t>(A.dimension()), -1);
  for (index_t i = 0; i < A.dimension(); ++i) {
    if (!member[static_cast<std::size_t>(i)]) continue;
    auto v = static_cast<std::size_t>(A.path(i).source);
    local[static_cast<std::size_t>(i)] = r.dims[v]++;
  }
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    auto s = static_cast<std::size_t>(qi.src[static_cast<std::size_t>(a)]);
    auto t = static_cast<std::size_t>(qi.tgt[static_cast<std::size_t>(a)]);
    RationalMatrix m(r.dims[s], r.dims[t]);
    index_t ap = A.arrow_path_index(a);
    for (index_t i = 0; i < A.dimension(); ++i) {
      if (!member[static_cast<std::size_t>(i)]) continue;
      if (A.path(i).source != qi.tgt[static_cast<std::size_t>(a)]) continue;
      auto prod = A.product(i, ap);
      if (!prod) continue;
      if (!member[static_cast<std::size_t>(*prod)]) {
        if (kill) continue;
        throw std::logic_error("path set not closed under the action");
      }
      m.set(local[static_cast<std::size_t>(*prod)],
            local[static_cast<std::size_t>(i)], 1);
    }
    r.actions.push_back(std::move(m));
  }
  return r;
}

inline std::vector<bool> visits_any(const PathBasis& A,
                                    const std::vector<bool>& marked) {
  const auto& qi = A.quiver_index();
  std::vector<bool> out(static_cast<std::size_t>(A.dimension()), false);
  for (index_t i = 0; i < A.dimension(); ++i) {
    const Path& p = A.path(i);
    bool hit = marked[static_cast<std::size_t>(p.source)] ||
               marked[static_cast<std::size_t>(p.target)];
    for (auto a : p.arrows) {
      if (hit) break;
      hit = marked[static_cast<std::size_t>(
                qi.src[static_cast<std::size_t>(a)])] ||
            marked[static_cast<std::size_t>(
                qi.tgt[static_cast<std::size_t>(a)])];
    }
    out[static_cast<std::size_t>(i)] = hit;
  }
  return out;
}

}  // namespace detail

// The regular right module: vertex-v component spanned by the allowed paths
// with source v, arrows acting by right composition.
inline Representation regular_rep(const PathBasis& A) {
  std::vector<bool> all(static_cast<std::size_t>(A.dimension()), true);
  return detail::paths_rep(A, all, false);
}

// The span of all allowed paths visiting a marked vertex: the two-sided
// ideal generated by the corresponding idempotents, as a right module.
struct IdealRep {
  Representation rep;
  std::vector<index_t> path_indices;  // members, in basis order
};

inline IdealRep ideal_rep(const PathBasis& A,
                          const std::vector<std::int32_t>& vertices) {
  std::vector<bool> marked(
      static_cast<std::size_t>(A.quiver_index().vertex_count()), false);
  for (auto v : vertices) marked[static_cast<std::size_t>(v)] = true;
  std::vector<bool> member = detail::visits_any(A, marked);
  IdealRep out;
  out.rep = detail::paths_rep(A, member, false);
  for (index_t i = 0; i < A.dimension(); ++i)
    if (member[static_cast<std::size_t>(i)]) out.path_indices.push_back(i);
  return out;
}

// The quotient of the regular module by that ideal: spanned by the paths
// avoiding the marked vertices, products leaving the set mapped to zero.
inline Representation quotient_by_ideal(
    const PathBasis& A, const std::vector<std::int32_t>& vertices) {
  std::vector<bool> marked(
      static_cast<std::size_t>(A.quiver_index().vertex_count()), false);
  for (auto v : vertices) marked[static_cast<std::size_t>(v)] = true;
  std::vector<bool> member = detail::visits_any(A, marked);
  member.flip();
  return detail::paths_rep(A, member, true);
}

// Indecomposable projective at a vertex, with enough bookkeeping to build
// maps out of direct sums of them.
struct ProjectiveRep {
  Representation rep;
  std::vector<std::int32_t> summand_vertices;
  // comp_basis[v][local] = (summand, global path index)
  std::vector<std::vector<std::pair<index_t, index_t>>> comp_basis;
  // generators[k] = local index, in the component at summand_vertices[k], of
  // the trivial path of summand k
  std::vector<index_t> generators;
};

inline ProjectiveRep projective_sum(const PathBasis& A,
                                    const std::vector<std::int32_t>& verts) {
  const auto& qi = A.quiver_index();
  const auto nv = static_cast<std::size_t>(qi.vertex_count());
  ProjectiveRep P;
  P.summand_vertices = verts;
  P.comp_basis.resize(nv);
  // offsets[v][k] = start of summand k's block in component v
  std::vector<std::vector<index_t>> offsets(
      nv, std::vector<index_t>(verts.size(), 0));
  for (std::size_t v = 0; v < nv; ++v) {
    index_t off = 0;
    for (std::size_t k = 0; k < verts.size(); ++k) {
      offsets[v][k] = off;
      auto range = A.bucket_range(static_cast<std::int32_t>(v), verts[k]);
      for (index_t i = range.first; i < range.second; ++i)
        P.comp_basis[v].emplace_back(static_cast<index_t>(k), i);
      off += range.second - range.first;
    }
  }
  P.rep.dims.resize(nv);
  for (std::size_t v = 0; v < nv; ++v)
    P.rep.dims[v] = static_cast<index_t>(P.comp_basis[v].size());
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    auto s = static_cast<std::size_t>(qi.src[static_cast<std::size_t>(a)]);
    auto t = static_cast<std::size_t>(qi.tgt[static_cast<std::size_t>(a)]);
    RationalMatrix m(P.rep.dims[s], P.rep.dims[t]);
    index_t ap = A.arrow_path_index(a);
    for (index_t col = 0; col < P.rep.dims[t]; ++col) {
      auto [k, u] = P.comp_basis[t][static_cast<std::size_t>(col)];
      auto prod = A.product(u, ap);
      if (!prod) continue;
      auto range = A.bucket_range(static_cast<std::int32_t>(s),
                                  verts[static_cast<std::size_t>(k)]);
      m.set(offsets[s][static_cast<std::size_t>(k)] + (*prod - range.first),
            col, 1);
    }
    P.rep.actions.push_back(std::move(m));
  }
  for (std::size_t k = 0; k < verts.size(); ++k) {
    auto v = static_cast<std::size_t>(verts[k]);
    index_t triv = A.trivial_path_index(verts[k]);
    auto range = A.bucket_range(verts[k], verts[k]);
    P.generators.push_back(offsets[v][k] + (triv - range.first));
  }
  return P;
}

inline ProjectiveRep projective_rep(const PathBasis& A, std::int32_t vertex) {
  return projective_sum(A, {vertex});
}

// ---------------------------------------------------------------------------
// Hom spaces by solving the intertwining system exactly.

struct HomSpace {
  index_t dim = 0;
  std::vector<ModuleMap> basis;
};

inline HomSpace hom_space(const PathBasis& A, const Representation& M,
                          const Representation& N) {
  const auto& qi = A.quiver_index();
  const auto nv = static_cast<std::size_t>(qi.vertex_count());
  std::vector<index_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v)
    offset[v + 1] = offset[v] + N.dims[v] * M.dims[v];
  const index_t unknowns = offset[nv];
  auto unk = [&](std::size_t v, index_t r, index_t c) {
    return offset[v] + r * M.dims[v] + c;
  };

  index_t eq_rows = 0;
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    auto s = static_cast<std::size_t>(qi.src[static_cast<std::size_t>(a)]);
    auto t = static_cast<std::size_t>(qi.tgt[static_cast<std::size_t>(a)]);
    eq_rows += N.dims[s] * M.dims[t];
  }
  RationalMatrix E(eq_rows, unknowns);
  index_t eq_base = 0;
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    auto s = static_cast<std::size_t>(qi.src[static_cast<std::size_t>(a)]);
    auto t = static_cast<std::size_t>(qi.tgt[static_cast<std::size_t>(a)]);
    const auto& Ma = M.actions[static_cast<std::size_t>(a)];
    const auto& Na = N.actions[static_cast<std::size_t>(a)];
    // equation (r, m): sum_c f_s[r][c] Ma[c][m] - sum_k Na[r][k] f_t[k][m]
    for (index_t col = 0; col < Ma.cols(); ++col)
      for (const auto& [c, val] : Ma.column(col))
        for (index_t r = 0; r < N.dims[s]; ++r)
          E.add_to(eq_base + r * M.dims[t] + col, unk(s, r, c), val);
    for (index_t k = 0; k < Na.cols(); ++k)
      for (const auto& [r, val] : Na.column(k))
        for (index_t m = 0; m < M.dims[t]; ++m)
          E.add_to(eq_base + r * M.dims[t] + m, unk(t, k, m), -val);
    eq_base += N.dims[s] * M.dims[t];
  }

  RationalMatrix ns = E.nullspace();
  HomSpace out;
  out.dim = ns.cols();
  for (index_t j = 0; j < ns.cols(); ++j) {
    ModuleMap f;
    for (std::size_t v = 0; v < nv; ++v)
      f.vertex_maps.emplace_back(N.dims[v], M.dims[v]);
    for (const auto& [row, val] : ns.column(j)) {
      std::size_t v = 0;
      while (offset[v + 1] <= row) ++v;
      index_t rel = row - offset[v];
      f.vertex_maps[v].set(rel / M.dims[v], rel % M.dims[v], val);
    }
    out.basis.push_back(std::move(f));
  }
  return out;
}

inline index_t hom_dim(const PathBasis& A, const Representation& M,
                       const Representation& N) {
  return hom_space(A, M, N).dim;
}

inline Representation direct_sum(const PathBasis& A, const Representation& M,
                                 const Representation& N) {
  const auto& qi = A.quiver_index();
  Representation r;
  for (std::size_t v = 0; v < M.dims.size(); ++v)
    r.dims.push_back(M.dims[v] + N.dims[v]);
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    auto s = static_cast<std::size_t>(qi.src[static_cast<std::size_t>(a)]);
    auto t = static_cast<std::size_t>(qi.tgt[static_cast<std::size_t>(a)]);
    RationalMatrix m(r.dims[s], r.dims[t]);
    const auto& Ma = M.actions[static_cast<std::size_t>(a)];
    const auto& Na = N.actions[static_cast<std::size_t>(a)];
    for (index_t c = 0; c < Ma.cols(); ++c)
      for (const auto& [row, val] : Ma.column(c)) m.set(row, c, val);
    for (index_t c = 0; c < Na.cols(); ++c)
      for (const auto& [row, val] : Na.column(c))
        m.set(M.dims[s] + row, M.dims[t] + c, val);
    r.actions.push_back(std::move(m));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Radical, top, socle.

namespace detail {

// column-echelon span of the images of all arrow actions, per vertex
inline std::vector<ColumnEchelon> radical_echelons(const PathBasis& A,
                                                   const Representation& R) {
  const auto& qi = A.quiver_index();
  std::vector<ColumnEchelon> ech;
  ech.reserve(R.dims.size());
  for (std::size_t v = 0; v < R.dims.size(); ++v)
    ech.emplace_back(R.dims[v], false);
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    auto s = static_cast<std::size_t>(qi.src[static_cast<std::size_t>(a)]);
    const auto& m = R.actions[static_cast<std::size_t>(a)];
    for (index_t c = 0; c < m.cols(); ++c) {
      SparseQColumn col = m.column(c);
      ech[s].add(std::move(col), nullptr);
    }
  }
  return ech;
}

}  // namespace detail

// per-vertex dimensions of the largest semisimple quotient
inline std::vector<index_t> top_dims(const PathBasis& A,
                                     const Representation& R) {
  auto ech = detail::radical_echelons(A, R);
  std::vector<index_t> out;
  for (std::size_t v = 0; v < R.dims.size(); ++v)
    out.push_back(R.dims[v] - ech[v].rank());
  return out;
}

struct SubRep {
  Representation rep;
  ModuleMap inclusion;
};

// span of all arrow-action images, with its inclusion
inline SubRep radical_rep(const PathBasis& A, const Representation& R) {
  const auto& qi = A.quiver_index();
  auto ech = detail::radical_echelons(A, R);
  SubRep out;
  for (std::size_t v = 0; v < R.dims.size(); ++v) {
    out.rep.dims.push_back(ech[v].rank());
    RationalMatrix inc(R.dims[v], ech[v].rank());
    for (index_t j = 0; j < ech[v].rank(); ++j)
      inc.set_column(j, ech[v].basis()[static_cast<std::size_t>(j)]);
    out.inclusion.vertex_maps.push_back(std::move(inc));
  }
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    auto s = static_cast<std::size_t>(qi.src[static_cast<std::size_t>(a)]);
    auto t = static_cast<std::size_t>(qi.tgt[static_cast<std::size_t>(a)]);
    const auto& m = R.actions[static_cast<std::size_t>(a)];
    RationalMatrix act(out.rep.dims[s], out.rep.dims[t]);
    for (index_t j = 0; j < out.rep.dims[t]; ++j) {
      SparseQColumn img =
          m.apply(ech[t].basis()[static_cast<std::size_t>(j)]);
      std::vector<Rational> coords;
      if (!ech[s].solve(img, coords))
        throw std::logic_error("radical not closed under the action");
      SparseQColumn col;
      for (std::size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero())
          col.emplace_back(static_cast<index_t>(k), coords[k]);
      act.set_column(j, col);
    }
    out.rep.actions.push_back(std::move(act));
  }
  return out;
}

struct QuotRep {
  Representation rep;
  ModuleMap projection;
};

// joint kernel of all arrow actions: the largest semisimple submodule
inline SubRep socle_rep(const PathBasis& A, const Representation& R) {
  const auto& qi = A.quiver_index();
  const auto nv = static_cast<std::size_t>(qi.vertex_count());
  SubRep out;
  for (std::size_t t = 0; t < nv; ++t) {
    // stack every action consuming component t
    index_t rows = 0;
    std::vector<std::pair<std::int32_t, index_t>> blocks;
    for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
      if (static_cast<std::size_t>(qi.tgt[static_cast<std::size_t>(a)]) != t)
        continue;
      blocks.emplace_back(a, rows);
      rows += R.dims[static_cast<std::size_t>(
          qi.src[static_cast<std::size_t>(a)])];
    }
    RationalMatrix stacked(rows, R.dims[t]);
    for (const auto& [a, base] : blocks) {
      const auto& m = R.actions[static_cast<std::size_t>(a)];
      for (index_t c = 0; c < m.cols(); ++c)
        for (const auto& [row, val] : m.column(c))
          stacked.set(base + row, c, val);
    }
    RationalMatrix ker = stacked.nullspace();
    out.rep.dims.push_back(ker.cols());
    out.inclusion.vertex_maps.push_back(std::move(ker));
  }
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    auto s = static_cast<std::size_t>(qi.src[static_cast<std::size_t>(a)]);
    auto t = static_cast<std::size_t>(qi.tgt[static_cast<std::size_t>(a)]);
    out.rep.actions.emplace_back(out.rep.dims[s], out.rep.dims[t]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Projective covers and minimal resolutions.

struct Cover {
  ProjectiveRep P;
  ModuleMap map;  // P -> M, surjective with kernel inside the radical
};

inline Cover projective_cover(const PathBasis& A, const Representation& M) {
  const auto& qi = A.quiver_index();
  const auto nv = static_cast<std::size_t>(qi.vertex_count());
  auto ech = detail::radical_echelons(A, M);
  // deterministic lifts: unit vectors completing the radical to the whole
  // component, scanned in coordinate order
  std::vector<std::vector<SparseQColumn>> lifts(nv);
  std::vector<std::int32_t> summands;
  for (std::size_t v = 0; v < nv; ++v) {
    for (index_t i = 0; i < M.dims[v] &&
                        ech[v].rank() < M.dims[v];
         ++i) {
      SparseQColumn e{{i, Rational(1)}};
      index_t before = ech[v].rank();
      ech[v].add(e, nullptr);
      if (ech[v].rank() > before) lifts[v].push_back(std::move(e));
    }
    for (std::size_t k = 0; k < lifts[v].size(); ++k)
      summands.push_back(static_cast<std::int32_t>(v));
  }
  Cover out{projective_sum(A, summands), {}};
  // cover on a basis slot (summand k at vertex i_k, path u: w -> i_k):
  // the lift of summand k pushed along u
  for (std::size_t w = 0; w < nv; ++w) {
    RationalMatrix cw(M.dims[w], out.P.rep.dims[w]);
    for (index_t col = 0;
         col < static_cast<index_t>(out.P.comp_basis[w].size()); ++col) {
      auto [k, u] = out.P.comp_basis[w][static_cast<std::size_t>(col)];
      auto v = static_cast<std::size_t>(
          out.P.summand_vertices[static_cast<std::size_t>(k)]);
      index_t local = 0;
      {
        // position of k among summands at the same vertex
        index_t seen = 0;
        for (index_t k2 = 0; k2 < k; ++k2)
          if (out.P.summand_vertices[static_cast<std::size_t>(k2)] ==
              out.P.summand_vertices[static_cast<std::size_t>(k)])
            ++seen;
        local = seen;
      }
      SparseQColumn vec = lifts[v][static_cast<std::size_t>(local)];
      apply_path_to_vector(A, M, A.path(u), vec);
      cw.set_column(col, vec);
    }
    out.map.vertex_maps.push_back(std::move(cw));
  }
  return out;
}

// kernel of a module map, with induced actions and inclusion
inline SubRep kernel_rep(const PathBasis& A, const Representation& M,
                         const ModuleMap& f) {
  const auto& qi = A.quiver_index();
  const auto nv = static_cast<std::size_t>(qi.vertex_count());
  SubRep out;
  // tracked echelons let us express images back in the fed kernel columns
  std::vector<ColumnEchelon> span;
  for (std::size_t v = 0; v < nv; ++v) {
    RationalMatrix ker = f.vertex_maps[v].nullspace();
    out.rep.dims.push_back(ker.cols());
    ColumnEchelon e(M.dims[v], true);
    for (index_t j = 0; j < ker.cols(); ++j) e.add(ker.column(j), nullptr);
    span.push_back(std::move(e));
    out.inclusion.vertex_maps.push_back(std::move(ker));
  }
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    auto s = static_cast<std::size_t>(qi.src[static_cast<std::size_t>(a)]);
    auto t = static_cast<std::size_t>(qi.tgt[static_cast<std::size_t>(a)]);
    const auto& m = M.actions[static_cast<std::size_t>(a)];
    RationalMatrix act(out.rep.dims[s], out.rep.dims[t]);
    for (index_t j = 0; j < out.rep.dims[t]; ++j) {
      SparseQColumn img = m.apply(out.inclusion.vertex_maps[t].column(j));
      std::vector<Rational> mu;
      if (!span[s].solve(img, mu))
        throw std::logic_error("kernel not closed under the action");
      SparseQColumn acc;
      for (std::size_t k = 0; k < mu.size(); ++k)
        if (!mu[k].is_zero())
          detail::axpy(acc, -mu[k], span[s].combinations()[k]);
      act.set_column(j, acc);
    }
    out.rep.actions.push_back(std::move(act));
  }
  return out;
}

struct Resolution {
  std::vector<ProjectiveRep> terms;
  // maps[0]: terms[0] -> M; maps[p]: terms[p] -> terms[p-1] for p >= 1
  std::vector<ModuleMap> maps;
  bool complete = false;  // the next syzygy is zero
  index_t length() const { return static_cast<index_t>(terms.size()) - 1; }
};

inline Resolution min_resolution(const PathBasis& A, const Representation& M,
                                 index_t max_length) {
  Resolution res;
  if (M.is_zero()) {
    res.complete = true;
    return res;
  }
  Representation cur = M;
  std::optional<ModuleMap> inclusion;  // of cur into the previous term
  for (index_t p = 0; p <= max_length; ++p) {
    Cover c = projective_cover(A, cur);
    ModuleMap step = c.map;
    if (inclusion) {
      for (std::size_t v = 0; v < step.vertex_maps.size(); ++v)
        step.vertex_maps[v] =
            inclusion->vertex_maps[v] * c.map.vertex_maps[v];
    }
    SubRep ker = kernel_rep(A, c.P.rep, c.map);
    res.terms.push_back(std::move(c.P));
    res.maps.push_back(std::move(step));
    if (ker.rep.is_zero()) {
      res.complete = true;
      break;
    }
    cur = ker.rep;
    inclusion = ker.inclusion;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Ext via Hom(-, N) applied to a minimal resolution.  Hom out of a recorded
// projective sum is the direct sum of N's components at the summand
// vertices; the induced maps push the next term's generators through the
// connecting map and act by the written paths.

namespace detail {

inline index_t hom_from_projective_dim(const ProjectiveRep& P,
                                       const Representation& N) {
  index_t d = 0;
  for (auto v : P.summand_vertices) d += N.dims[static_cast<std::size_t>(v)];
  return d;
}

// matrix of Hom(terms[p-1], N) -> Hom(terms[p], N)
inline RationalMatrix induced_hom_map(const PathBasis& A,
                                      const ProjectiveRep& from,
                                      const ProjectiveRep& to,
                                      const ModuleMap& connecting,
                                      const Representation& N) {
  std::vector<index_t> dom_offsets{0}, cod_offsets{0};
  for (auto v : from.summand_vertices)
    dom_offsets.push_back(dom_offsets.back() +
                          N.dims[static_cast<std::size_t>(v)]);
  for (auto v : to.summand_vertices)
    cod_offsets.push_back(cod_offsets.back() +
                          N.dims[static_cast<std::size_t>(v)]);
  RationalMatrix out(cod_offsets.back(), dom_offsets.back());
  std::unordered_map<index_t, RationalMatrix> path_cache;
  for (std::size_t l = 0; l < to.summand_vertices.size(); ++l) {
    auto vl = static_cast<std::size_t>(to.summand_vertices[l]);
    SparseQColumn image = connecting.vertex_maps[vl].column(
        to.generators[l]);
    for (const auto& [row, coeff] : image) {
      auto [k, u] = from.comp_basis[vl][static_cast<std::size_t>(row)];
      auto it = path_cache.find(u);
      if (it == path_cache.end())
        it = path_cache.emplace(u, apply_path(A, N, A.path(u))).first;
      const RationalMatrix& pm = it->second;
      for (index_t c = 0; c < pm.cols(); ++c)
        for (const auto& [r, val] : pm.column(c))
          out.add_to(cod_offsets[l] + r,
                     dom_offsets[static_cast<std::size_t>(k)] + c,
                     coeff * val);
    }
  }
  return out;
}

}  // namespace detail

inline std::vector<index_t> ext_dims(const PathBasis& A,
                                     const Representation& M,
                                     const Representation& N,
                                     index_t p_max) {
  Resolution res = min_resolution(A, M, p_max + 1);
  std::vector<index_t> dims(static_cast<std::size_t>(p_max) + 2, 0);
  for (std::size_t p = 0; p < res.terms.size() &&
                          p < dims.size();
       ++p)
    dims[p] = detail::hom_from_projective_dim(res.terms[p], N);
  std::vector<index_t> ranks(static_cast<std::size_t>(p_max) + 2, 0);
  for (std::size_t p = 1; p < res.terms.size() && p < ranks.size(); ++p) {
    RationalMatrix delta = detail::induced_hom_map(
        A, res.terms[p - 1], res.terms[p], res.maps[p], N);
    ranks[p] = delta.rank();
  }
  std::vector<index_t> out;
  for (index_t p = 0; p <= p_max; ++p) {
    auto i = static_cast<std::size_t>(p);
    out.push_back(dims[i] - ranks[i] - ranks[i + 1]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Heredity ideals and quasi-heredity for two vertices.

struct HeredityReport {
  bool ok = false;
  std::string reason;
};

// (a) no nontrivial path between marked vertices (the corner algebra is
// semisimple) and (b) the ideal is projective as a right module, checked by
// comparing it with the projective cover of its top.
inline HeredityReport is_heredity_ideal(
    const PathBasis& A, const std::vector<std::int32_t>& vertices) {
  for (auto s : vertices)
    for (auto t : vertices) {
      index_t c = A.count(s, t);
      index_t allowed = s == t ? 1 : 0;
      if (c > allowed)
        return {false,
                "a nontrivial path joins the marked vertices, so the corner "
                "algebra is not semisimple"};
    }
  IdealRep ideal = ideal_rep(A, vertices);
  if (ideal.rep.is_zero()) return {true, "zero ideal"};
  std::vector<index_t> t = top_dims(A, ideal.rep);
  index_t cover_dim = 0;
  for (std::size_t v = 0; v < t.size(); ++v) {
    ProjectiveRep P = projective_rep(A, static_cast<std::int32_t>(v));
    cover_dim += t[v] * P.rep.total_dim();
  }
  if (cover_dim != ideal.rep.total_dim())
    return {false, "the ideal is not projective: its projective cover has "
                   "dimension " +
                       std::to_string(cover_dim) + " but the ideal has " +
                       std::to_string(ideal.rep.total_dim())};
  return {true, "corner algebra semisimple and ideal projective"};
}

struct QHReport {
  bool ok = false;
  // vertex whose ideal starts a working chain, when ok
  std::optional<std::int32_t> start_vertex;
};

// For two simples a heredity chain of length two is the only option: some
// single-vertex ideal is heredity and the quotient by it is semisimple,
// i.e. every nontrivial cycle at the other vertex passes through the first.
inline QHReport is_quasi_hereditary_two_vertex(const PathBasis& A) {
  const auto& qi = A.quiver_index();
  if (qi.vertex_count() != 2)
    throw AlgebraError(ErrorCode::MoreThanTwoVertices,
                       "quasi-heredity check requires exactly two vertices");
  for (std::int32_t s = 0; s < 2; ++s) {
    if (!is_heredity_ideal(A, {s}).ok) continue;
    std::int32_t other = 1 - s;
    bool surviving_cycle = false;
    auto range = A.bucket_range(other, other);
    for (index_t i = range.first; i < range.second && !surviving_cycle; ++i) {
      const Path& p = A.path(i);
      if (p.trivial()) continue;
      bool through_s = false;
      for (auto a : p.arrows)
        if (qi.src[static_cast<std::size_t>(a)] == s ||
            qi.tgt[static_cast<std::size_t>(a)] == s)
          through_s = true;
      if (!through_s) surviving_cycle = true;
    }
    if (!surviving_cycle) return {true, s};
  }
  return {false, std::nullopt};
}

// ---------------------------------------------------------------------------
// Quotient by the image of a module map, and the tilting construction.

inline QuotRep quotient_by_image(const PathBasis& A, const Representation& M,
                                 const Representation& N,
                                 const ModuleMap& f) {
  (void)M;
  const auto& qi = A.quiver_index();
  const auto nv = static_cast<std::size_t>(qi.vertex_count());
  QuotRep out;
  std::vector<std::vector<index_t>> free_rows(nv);
  std::vector<ColumnEchelon> ech;
  for (std::size_t v = 0; v < nv; ++v) {
    ColumnEchelon e(N.dims[v], false);
    const auto& m = f.vertex_maps[v];
    for (index_t c = 0; c < m.cols(); ++c) e.add(m.column(c), nullptr);
    for (index_t r = 0; r < N.dims[v]; ++r)
      if (!e.row_is_pivot(r)) free_rows[v].push_back(r);
    out.rep.dims.push_back(static_cast<index_t>(free_rows[v].size()));
    ech.push_back(std::move(e));
  }
  for (std::size_t v = 0; v < nv; ++v) {
    RationalMatrix proj(out.rep.dims[v], N.dims[v]);
    for (index_t c = 0; c < N.dims[v]; ++c) {
      SparseQColumn e{{c, Rational(1)}};
      SparseQColumn rem = ech[v].reduce(e, nullptr);
      for (const auto& [row, val] : rem) {
        auto it = std::lower_bound(free_rows[v].begin(), free_rows[v].end(),
                                   row);
        proj.set(static_cast<index_t>(it - free_rows[v].begin()), c, val);
      }
    }
    out.projection.vertex_maps.push_back(std::move(proj));
  }
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    auto s = static_cast<std::size_t>(qi.src[static_cast<std::size_t>(a)]);
    auto t = static_cast<std::size_t>(qi.tgt[static_cast<std::size_t>(a)]);
    const auto& m = N.actions[static_cast<std::size_t>(a)];
    RationalMatrix act(out.rep.dims[s], out.rep.dims[t]);
    for (index_t j = 0; j < out.rep.dims[t]; ++j) {
      SparseQColumn lifted{{free_rows[t][static_cast<std::size_t>(j)],
                            Rational(1)}};
      SparseQColumn img = m.apply(lifted);
      act.set_column(j, out.projection.vertex_maps[s].apply(img));
    }
    out.rep.actions.push_back(std::move(act));
  }
  return out;
}

struct TiltingReport {
  index_t cok_dim = 0;
  std::vector<index_t> ext_tt;  // Ext^0..Ext^2 of T with itself
  index_t end_dim = 0;
  std::array<std::array<index_t, 2>, 2> hom_matrix{};  // summands (cok, P_2)
};

// T = cok(f) + P_2 for f = (a.1, ..., a.x)^tr : P_1 -> P_2^x over the
// two-vertex algebra with x forward and y backward arrows.
inline TiltingReport tilting_check(long long x, long long y) {
  if (x < 1)
    throw AlgebraError(ErrorCode::DomainError,
                       "the tilting construction needs at least one forward "
                       "arrow");
  QuiverPresentation pres = build_B(x, y);
  PathBasis A = enumerate_paths(pres);
  const auto& qi = A.quiver_index();
  ProjectiveRep P1 = projective_rep(A, 0);
  std::vector<std::int32_t> copies(static_cast<std::size_t>(x), 1);
  ProjectiveRep P2x = projective_sum(A, copies);
  // f's component p is left multiplication by arrow a.(p+1)
  ModuleMap f;
  for (std::size_t w = 0; w < 2; ++w) {
    RationalMatrix fw(P2x.rep.dims[w], P1.rep.dims[w]);
    for (index_t col = 0; col < P1.rep.dims[w]; ++col) {
      auto [k0, u] = P1.comp_basis[w][static_cast<std::size_t>(col)];
      (void)k0;
      for (long long p = 0; p < x; ++p) {
        auto arrow = qi.arrow_id.at("a." + std::to_string(p + 1));
        auto prod = A.product(A.arrow_path_index(arrow), u);
        if (!prod) continue;
        // locate (summand p, *prod) in P2x's component w
        auto range = A.bucket_range(static_cast<std::int32_t>(w), 1);
        index_t block = range.second - range.first;
        fw.set(static_cast<index_t>(p) * block + (*prod - range.first), col,
               1);
      }
    }
    f.vertex_maps.push_back(std::move(fw));
  }
  QuotRep cok = quotient_by_image(A, P1.rep, P2x.rep, f);
  ProjectiveRep P2 = projective_rep(A, 1);
  Representation T = direct_sum(A, cok.rep, P2.rep);
  TiltingReport out;
  out.cok_dim = cok.rep.total_dim();
  out.ext_tt = ext_dims(A, T, T, 2);
  out.end_dim = hom_dim(A, T, T);
  out.hom_matrix[0][0] = hom_dim(A, cok.rep, cok.rep);
  out.hom_matrix[0][1] = hom_dim(A, P2.rep, cok.rep);
  out.hom_matrix[1][0] = hom_dim(A, cok.rep, P2.rep);
  out.hom_matrix[1][1] = hom_dim(A, P2.rep, P2.rep);
  return out;
}

}  // namespace stratakit
