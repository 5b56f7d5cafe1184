#pragma once

// Quiver presentations with quadratic monomial relations, and the path
// combinatorics everything else is built on.
//
// Convention: paths compose right to left.  A stored arrow sequence is in
// written order, so seq.front() is the last arrow applied and seq.back() the
// first.  A relation is an ordered pair (later, earlier) declaring the
// length-two path "later earlier" to be zero; it must be composable, i.e.
// target(earlier) == source(later).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "stratakit/matrix.hpp"

namespace stratakit {

enum class ErrorCode {
  DuplicateLabel,
  DanglingVertex,
  NonComposableRelation,
  UnknownArrow,
  DuplicateRelation,
  ParseError,
  InfiniteDimensional,
  GradedInput,
  InfiniteDual,
  SizeLimit,
  DomainError,
  Degenerate,
  InfiniteGlobalDimension,
  WrongSimpleCount,
  MoreThanTwoVertices,
  VerificationMismatch,
};

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Arrow {
  std::string label;
  std::string source;
  std::string target;
  int degree = 0;

  bool operator==(const Arrow&) const = default;
};

// (later, earlier) label pairs
using Relation = std::pair<std::string, std::string>;

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  bool is_graded() const {
    for (const auto& a : arrows)
      if (a.degree != 0) return true;
    return false;
  }

  bool operator==(const QuiverPresentation&) const = default;
};

// Checks well-formedness and returns a canonical copy (relations sorted,
// duplicates rejected).  Every structural operation assumes validated input.
inline QuiverPresentation validate(const QuiverPresentation& p) {
  std::unordered_set<std::string> vertex_names;
  for (const auto& v : p.vertices) {
    if (!vertex_names.insert(v).second)
      throw AlgebraError(ErrorCode::DuplicateLabel,
                         "duplicate vertex \"" + v + "\"");
  }
  std::unordered_set<std::string> arrow_names;
  for (const auto& a : p.arrows) {
    if (!arrow_names.insert(a.label).second)
      throw AlgebraError(ErrorCode::DuplicateLabel,
                         "duplicate arrow \"" + a.label + "\"");
    if (!vertex_names.count(a.source))
      throw AlgebraError(ErrorCode::DanglingVertex,
                         "arrow \"" + a.label + "\" has undeclared source \"" +
                             a.source + "\"");
    if (!vertex_names.count(a.target))
      throw AlgebraError(ErrorCode::DanglingVertex,
                         "arrow \"" + a.label + "\" has undeclared target \"" +
                             a.target + "\"");
  }
  std::unordered_map<std::string, const Arrow*> by_label;
  for (const auto& a : p.arrows) by_label[a.label] = &a;
  std::unordered_set<std::string> seen;
  for (const auto& [later, earlier] : p.relations) {
    for (const auto& lab : {later, earlier}) {
      if (!by_label.count(lab))
        throw AlgebraError(ErrorCode::UnknownArrow,
                           "relation references unknown arrow \"" + lab + "\"");
    }
    if (by_label[earlier]->target != by_label[later]->source)
      throw AlgebraError(
          ErrorCode::NonComposableRelation,
          "relation (" + later + ", " + earlier + ") is not composable");
    if (!seen.insert(later + "\x1f" + earlier).second)
      throw AlgebraError(ErrorCode::DuplicateRelation,
                         "duplicate relation (" + later + ", " + earlier + ")");
  }
  QuiverPresentation out = p;
  std::sort(out.relations.begin(), out.relations.end());
  return out;
}

namespace detail {

// Integer-indexed view of a validated presentation.
struct QuiverIndex {
  explicit QuiverIndex(const QuiverPresentation& p) {
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
      vertex_id[p.vertices[i]] = static_cast<std::int32_t>(i);
    vertex_labels = p.vertices;
    for (const auto& a : p.arrows) {
      arrow_id[a.label] = static_cast<std::int32_t>(arrow_labels.size());
      arrow_labels.push_back(a.label);
      src.push_back(vertex_id.at(a.source));
      tgt.push_back(vertex_id.at(a.target));
      deg.push_back(a.degree);
    }
    for (const auto& [later, earlier] : p.relations)
      relation_keys.insert(key(arrow_id.at(later), arrow_id.at(earlier)));
    const auto n = static_cast<std::int32_t>(arrow_labels.size());
    allowed_after.resize(n);
    forbidden_after.resize(n);
    for (std::int32_t a = 0; a < n; ++a) {
      for (std::int32_t b = 0; b < n; ++b) {
        if (tgt[a] != src[b]) continue;  // b must start where a ends
        if (relation_keys.count(key(b, a))) {
          forbidden_after[a].push_back(b);
        } else {
          allowed_after[a].push_back(b);
        }
      }
    }
  }

  static std::uint64_t key(std::int32_t later, std::int32_t earlier) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(later))
            << 32) |
           static_cast<std::uint32_t>(earlier);
  }

  bool is_relation(std::int32_t later, std::int32_t earlier) const {
    return relation_keys.count(key(later, earlier)) > 0;
  }

  std::int32_t vertex_count() const {
    return static_cast<std::int32_t>(vertex_labels.size());
  }
  std::int32_t arrow_count() const {
    return static_cast<std::int32_t>(arrow_labels.size());
  }

  std::unordered_map<std::string, std::int32_t> vertex_id;
  std::unordered_map<std::string, std::int32_t> arrow_id;
  std::vector<std::string> vertex_labels;
  std::vector<std::string> arrow_labels;
  std::vector<std::int32_t> src, tgt;
  std::vector<int> deg;
  std::unordered_set<std::uint64_t> relation_keys;
  // allowed_after[a] = arrows b with "b a" a nonzero length-2 path
  std::vector<std::vector<std::int32_t>> allowed_after;
  std::vector<std::vector<std::int32_t>> forbidden_after;
};

}  // namespace detail

struct Path {
  std::vector<std::int32_t> arrows;  // written order, front() applied last
  std::int32_t source = 0;
  std::int32_t target = 0;

  index_t length() const { return static_cast<index_t>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }
  bool operator==(const Path&) const = default;
};

inline std::vector<std::string> path_labels(const QuiverPresentation& p,
                                            const Path& path) {
  std::vector<std::string> out;
  out.reserve(path.arrows.size());
  for (auto a : path.arrows)
    out.push_back(p.arrows[static_cast<std::size_t>(a)].label);
  return out;
}

namespace detail {

struct PathKeyHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

// The full monomial basis of a finite-dimensional presentation: every allowed
// path, sorted by (source, target, length, arrow sequence).
class PathBasis {
 public:
  PathBasis(const QuiverPresentation& presentation,
            std::vector<Path> paths)
      : presentation_(presentation),
        index_(presentation),
        paths_(std::move(paths)) {
    std::sort(paths_.begin(), paths_.end(), [](const Path& a, const Path& b) {
      if (a.source != b.source) return a.source < b.source;
      if (a.target != b.target) return a.target < b.target;
      if (a.arrows.size() != b.arrows.size())
        return a.arrows.size() < b.arrows.size();
      return a.arrows < b.arrows;
    });
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      std::vector<std::int32_t> k = key_(paths_[i]);
      seq_index_[std::move(k)] = static_cast<index_t>(i);
    }
    const auto nv = static_cast<std::size_t>(index_.vertex_count());
    counts_.assign(nv, std::vector<index_t>(nv, 0));
    for (const auto& path : paths_)
      ++counts_[static_cast<std::size_t>(path.target)]
              [static_cast<std::size_t>(path.source)];
  }

  const QuiverPresentation& presentation() const { return presentation_; }
  const detail::QuiverIndex& quiver_index() const { return index_; }
  const std::vector<Path>& paths() const { return paths_; }
  index_t dimension() const { return static_cast<index_t>(paths_.size()); }
  const Path& path(index_t i) const {
    return paths_[static_cast<std::size_t>(i)];
  }

  // number of allowed paths source -> target
  index_t count(std::int32_t source, std::int32_t target) const {
    return counts_[static_cast<std::size_t>(target)]
                  [static_cast<std::size_t>(source)];
  }

  // half-open index range of the paths source -> target (they are contiguous
  // in the sorted order)
  std::pair<index_t, index_t> bucket_range(std::int32_t source,
                                           std::int32_t target) const {
    auto lo = std::partition_point(
        paths_.begin(), paths_.end(), [&](const Path& p) {
          return p.source < source ||
                 (p.source == source && p.target < target);
        });
    auto hi = std::partition_point(lo, paths_.end(), [&](const Path& p) {
      return p.source == source && p.target == target;
    });
    return {static_cast<index_t>(lo - paths_.begin()),
            static_cast<index_t>(hi - paths_.begin())};
  }

  std::optional<index_t> index_of(const Path& p) const {
    auto it = seq_index_.find(key_(p));
    if (it == seq_index_.end()) return std::nullopt;
    return it->second;
  }

  index_t trivial_path_index(std::int32_t vertex) const {
    Path e{{}, vertex, vertex};
    auto idx = index_of(e);
    if (!idx) throw std::logic_error("missing trivial path");
    return *idx;
  }

  index_t arrow_path_index(std::int32_t arrow) const {
    Path p{{arrow}, index_.src[static_cast<std::size_t>(arrow)],
           index_.tgt[static_cast<std::size_t>(arrow)]};
    auto idx = index_of(p);
    if (!idx) throw std::logic_error("missing arrow path");
    return *idx;
  }

  // Product u * v (u applied after v).  Empty when the endpoints do not meet
  // or the junction is a relation.
  std::optional<index_t> product(index_t u_idx, index_t v_idx) const {
    const Path& u = path(u_idx);
    const Path& v = path(v_idx);
    if (u.source != v.target) return std::nullopt;
    if (u.trivial()) return v_idx;
    if (v.trivial()) return u_idx;
    if (index_.is_relation(u.arrows.back(), v.arrows.front()))
      return std::nullopt;
    Path w;
    w.arrows.reserve(u.arrows.size() + v.arrows.size());
    w.arrows.insert(w.arrows.end(), u.arrows.begin(), u.arrows.end());
    w.arrows.insert(w.arrows.end(), v.arrows.begin(), v.arrows.end());
    w.source = v.source;
    w.target = u.target;
    auto idx = index_of(w);
    if (!idx) throw std::logic_error("closed under products by construction");
    return idx;
  }

 private:
  static std::vector<std::int32_t> key_(const Path& p) {
    std::vector<std::int32_t> k;
    k.reserve(p.arrows.size() + 1);
    k.push_back(p.source);
    k.insert(k.end(), p.arrows.begin(), p.arrows.end());
    return k;
  }

  QuiverPresentation presentation_;
  detail::QuiverIndex index_;
  std::vector<Path> paths_;
  std::unordered_map<std::vector<std::int32_t>, index_t, detail::PathKeyHash>
      seq_index_;
  std::vector<std::vector<index_t>> counts_;
};

namespace detail {

// Depth-first enumeration of allowed paths in acting order; max_length < 0
// means unbounded (caller must have established finiteness).
inline std::vector<Path> enumerate_allowed(const QuiverIndex& qi,
                                           index_t max_length) {
  std::vector<Path> out;
  for (std::int32_t v = 0; v < qi.vertex_count(); ++v)
    out.push_back(Path{{}, v, v});
  std::vector<std::int32_t> chain;  // acting order
  auto emit = [&]() {
    Path p;
    p.arrows.assign(chain.rbegin(), chain.rend());
    p.source = qi.src[static_cast<std::size_t>(chain.front())];
    p.target = qi.tgt[static_cast<std::size_t>(chain.back())];
    out.push_back(std::move(p));
  };
  std::vector<std::int32_t> stack_arrow;
  std::vector<std::size_t> stack_next;
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    chain.assign(1, a);
    emit();
    if (max_length == 1) continue;
    stack_arrow.assign(1, a);
    stack_next.assign(1, 0);
    while (!stack_arrow.empty()) {
      std::int32_t cur = stack_arrow.back();
      std::size_t& next = stack_next.back();
      const auto& succ = qi.allowed_after[static_cast<std::size_t>(cur)];
      if (next < succ.size() &&
          (max_length < 0 ||
           static_cast<index_t>(chain.size()) < max_length)) {
        std::int32_t b = succ[next++];
        chain.push_back(b);
        emit();
        stack_arrow.push_back(b);
        stack_next.push_back(0);
      } else {
        stack_arrow.pop_back();
        stack_next.pop_back();
        chain.pop_back();
      }
    }
  }
  return out;
}

// cycle check on the arrow-composition graph restricted to allowed pairs
inline bool composition_graph_acyclic(const QuiverIndex& qi) {
  const auto n = static_cast<std::size_t>(qi.arrow_count());
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<std::pair<std::int32_t, std::size_t>> stack;
  for (std::int32_t start = 0; start < qi.arrow_count(); ++start) {
    if (state[static_cast<std::size_t>(start)] != 0) continue;
    stack.assign(1, {start, 0});
    state[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      auto& [a, next] = stack.back();
      const auto& succ = qi.allowed_after[static_cast<std::size_t>(a)];
      if (next < succ.size()) {
        std::int32_t b = succ[next++];
        int& s = state[static_cast<std::size_t>(b)];
        if (s == 1) return false;
        if (s == 0) {
          s = 1;
          stack.push_back({b, 0});
        }
      } else {
        state[static_cast<std::size_t>(a)] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace detail

inline bool is_finite_dimensional(const QuiverPresentation& p) {
  detail::QuiverIndex qi(p);
  return detail::composition_graph_acyclic(qi);
}

inline PathBasis enumerate_paths(const QuiverPresentation& p) {
  detail::QuiverIndex qi(p);
  if (!detail::composition_graph_acyclic(qi))
    throw AlgebraError(ErrorCode::InfiniteDimensional,
                       "the algebra has allowed paths of unbounded length");
  return PathBasis(p, detail::enumerate_allowed(qi, -1));
}

struct CartanMatrix {
  // entries[i][j] = number of allowed paths j -> i
  std::vector<std::vector<Int>> entries;

  bool operator==(const CartanMatrix&) const = default;

  Int sum() const {
    Int s = 0;
    for (const auto& row : entries)
      for (const auto& e : row) s += e;
    return s;
  }
};

inline CartanMatrix multiply(const CartanMatrix& a, const CartanMatrix& b) {
  const std::size_t n = a.entries.size();
  CartanMatrix out;
  out.entries.assign(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        out.entries[i][j] += a.entries[i][k] * b.entries[k][j];
  return out;
}

inline CartanMatrix cartan_matrix(const PathBasis& basis) {
  const auto nv = basis.quiver_index().vertex_count();
  CartanMatrix c;
  c.entries.assign(static_cast<std::size_t>(nv),
                   std::vector<Int>(static_cast<std::size_t>(nv), 0));
  for (std::int32_t i = 0; i < nv; ++i)
    for (std::int32_t j = 0; j < nv; ++j)
      c.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          basis.count(j, i);
  return c;
}

// Count-only route: memoized suffix counts over the composition graph, no
// basis materialization.  Agrees with cartan_matrix(enumerate_paths(p)).
inline CartanMatrix cartan_matrix(const QuiverPresentation& p) {
  detail::QuiverIndex qi(p);
  if (!detail::composition_graph_acyclic(qi))
    throw AlgebraError(ErrorCode::InfiniteDimensional,
                       "the algebra has allowed paths of unbounded length");
  const auto na = static_cast<std::size_t>(qi.arrow_count());
  const auto nv = static_cast<std::size_t>(qi.vertex_count());
  // suffix[a][t] = number of allowed paths with first applied arrow a and
  // target t; computed by reverse topological order of the DAG
  std::vector<std::vector<Int>> suffix(na, std::vector<Int>(nv, 0));
  std::vector<int> state(na, 0);
  std::vector<std::pair<std::int32_t, std::size_t>> stack;
  for (std::int32_t start = 0; start < qi.arrow_count(); ++start) {
    if (state[static_cast<std::size_t>(start)] != 0) continue;
    stack.assign(1, {start, 0});
    state[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      auto& [a, next] = stack.back();
      const auto& succ = qi.allowed_after[static_cast<std::size_t>(a)];
      if (next < succ.size()) {
        std::int32_t b = succ[next++];
        if (state[static_cast<std::size_t>(b)] == 0) {
          state[static_cast<std::size_t>(b)] = 1;
          stack.push_back({b, 0});
        }
      } else {
        auto ai = static_cast<std::size_t>(a);
        suffix[ai][static_cast<std::size_t>(qi.tgt[ai])] += 1;
        for (std::int32_t b : succ)
          for (std::size_t t = 0; t < nv; ++t)
            suffix[ai][t] += suffix[static_cast<std::size_t>(b)][t];
        state[ai] = 2;
        stack.pop_back();
      }
    }
  }
  CartanMatrix c;
  c.entries.assign(nv, std::vector<Int>(nv, 0));
  for (std::size_t v = 0; v < nv; ++v) c.entries[v][v] = 1;
  for (std::size_t a = 0; a < na; ++a) {
    auto s = static_cast<std::size_t>(qi.src[a]);
    for (std::size_t t = 0; t < nv; ++t) c.entries[t][s] += suffix[a][t];
  }
  return c;
}

// Same quiver; the relations become the complement of the input relations
// inside the set of composable arrow pairs.  An involution.
inline QuiverPresentation quadratic_dual(const QuiverPresentation& p) {
  detail::QuiverIndex qi(p);
  QuiverPresentation out;
  out.vertices = p.vertices;
  out.arrows = p.arrows;
  for (std::int32_t a = 0; a < qi.arrow_count(); ++a) {
    for (std::int32_t b : qi.allowed_after[static_cast<std::size_t>(a)]) {
      out.relations.emplace_back(
          qi.arrow_labels[static_cast<std::size_t>(b)],
          qi.arrow_labels[static_cast<std::size_t>(a)]);
    }
  }
  return validate(out);
}

// Length-p paths of the quadratic dual, i.e. paths of p arrows in which every
// consecutive pair is a relation of the input.  p = 0 gives the trivial paths.
inline std::vector<Path> dual_degree_component(const QuiverPresentation& p,
                                               index_t degree) {
  if (degree < 0)
    throw AlgebraError(ErrorCode::DomainError, "negative degree");
  QuiverPresentation dual = quadratic_dual(p);
  detail::QuiverIndex qi(dual);
  std::vector<Path> all = detail::enumerate_allowed(qi, degree);
  std::vector<Path> out;
  for (auto& path : all)
    if (path.length() == degree) out.push_back(std::move(path));
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.target != b.target) return a.target < b.target;
    return a.arrows < b.arrows;
  });
  return out;
}

// Largest degree with a nonzero dual component; nullopt when the dual is
// infinite-dimensional.  For these algebras this equals the global dimension.
inline std::optional<index_t> top_dual_degree(const QuiverPresentation& p) {
  QuiverPresentation dual = quadratic_dual(p);
  if (!is_finite_dimensional(dual)) return std::nullopt;
  PathBasis basis = enumerate_paths(dual);
  index_t top = 0;
  for (const auto& path : basis.paths()) top = std::max(top, path.length());
  return top;
}

}  // namespace stratakit
