#pragma once

// Derived-equivalence invariants for two-vertex algebras and the
// dichotomy certificate: nonvanishing Hochschild cohomology in a degree
// above two certifies derived simplicity, while a profile matching some
// two-vertex bidirected-arrow algebra is consistent with a derived
// equivalence to a quasi-hereditary algebra.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stratakit/families.hpp"
#include "stratakit/hochschild.hpp"
#include "stratakit/quiver.hpp"
#include "stratakit/rep.hpp"

namespace stratakit {

enum class Verdict {
  DerivedSimple,
  ConsistentWithQuasiHereditary,
  Inconclusive,
};

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::DerivedSimple:
      return "DerivedSimple";
    case Verdict::ConsistentWithQuasiHereditary:
      return "ConsistentWithQuasiHereditary";
    default:
      return "Inconclusive";
  }
}

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  // degree p > 2 with positive dimension, for DerivedSimple
  std::optional<std::pair<index_t, Int>> witness;
  // all (x, y) whose profile matches, for ConsistentWithQuasiHereditary
  std::vector<std::pair<long long, long long>> candidates;
  // hypotheses of the dichotomy that cannot be checked from a presentation
  std::vector<std::string> assumptions;
  HHProfile profile;
  index_t global_dimension = 0;
};

// Hochschild profile of the two-vertex algebra with x forward arrows, y
// backward arrows and all length-two compositions through vertex 1 zero:
// dimensions xy+1, x^2+y^2-1, xy in degrees 0, 1, 2 (semisimple case
// x = y = 0 has just dimension 2 in degree 0).
inline HHProfile b_profile(long long x, long long y) {
  HHProfile p;
  p.method = "formula";
  if (x == 0 && y == 0) {
    p.dims[0] = 2;
    return p;
  }
  p.dims[0] = Int(x) * y + 1;
  Int d1 = Int(x) * x + Int(y) * y - 1;
  if (d1 > 0) p.dims[1] = d1;
  if (x != 0 && y != 0) p.dims[2] = Int(x) * y;
  return p;
}

// All (x, y) with b_profile(x, y) equal to the given profile, in
// lexicographic order.  Solved through the defining equations (equal
// degree-2 entry = product, degree-1 entry + 1 = sum of squares) rather
// than by scanning a grid.
inline std::vector<std::pair<long long, long long>> match_b_profiles(
    const HHProfile& profile) {
  std::vector<std::pair<long long, long long>> out;
  for (const auto& [p, d] : profile.dims)
    if (p < 0 || p > 2) return out;
  if (profile.dims == std::map<int, Int>{{0, Int(2)}}) {
    out.emplace_back(0, 0);
    return out;
  }
  Int sum_sq = profile.at(1) + 1;
  if (sum_sq < 0) return out;
  for (long long x = 0; Int(x) * x <= sum_sq; ++x) {
    Int y_sq = sum_sq - Int(x) * x;
    long long y = 0;
    while (Int(y) * y < y_sq) ++y;
    if (Int(y) * y != y_sq) continue;
    if (b_profile(x, y).dims == profile.dims) out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline const std::vector<std::string>& certificate_assumptions() {
  static const std::vector<std::string> a{
      "two simple modules",
      "finite global dimension",
      "base field algebraically closed",
  };
  return a;
}

}  // namespace detail

// Global dimension of an ungraded finite-dimensional presentation, read off
// the quadratic dual and cross-checked against the minimal resolutions of
// the simple modules.
inline index_t global_dimension_checked(const QuiverPresentation& pres) {
  auto top = top_dual_degree(pres);
  if (!top)
    throw AlgebraError(ErrorCode::InfiniteGlobalDimension,
                       "the quadratic dual has arbitrarily long nonzero "
                       "paths, so the global dimension is infinite");
  PathBasis A = enumerate_paths(pres);
  index_t longest = 0;
  for (std::int32_t v = 0; v < A.quiver_index().vertex_count(); ++v) {
    Resolution r = min_resolution(A, simple_rep(A, v), *top + 1);
    if (!r.complete)
      throw AlgebraError(ErrorCode::VerificationMismatch,
                         "a simple module's resolution outlives the dual's "
                         "top degree");
    longest = std::max(longest, r.length());
  }
  if (longest != *top)
    throw AlgebraError(ErrorCode::VerificationMismatch,
                       "global dimension " + std::to_string(longest) +
                           " from resolutions disagrees with dual top "
                           "degree " +
                           std::to_string(*top));
  return longest;
}

inline Certificate certify(const QuiverPresentation& pres) {
  if (pres.vertices.size() != 2)
    throw AlgebraError(ErrorCode::WrongSimpleCount,
                       "certification covers algebras with exactly two "
                       "simple modules; got " +
                       std::to_string(pres.vertices.size()) + " vertices");
  if (pres.is_graded())
    throw AlgebraError(ErrorCode::GradedInput,
                       "certification expects an ungraded presentation");
  Certificate cert;
  cert.global_dimension = global_dimension_checked(pres);
  cert.profile = hh_koszul(pres);
  cert.assumptions = detail::certificate_assumptions();
  for (auto it = cert.profile.dims.rbegin(); it != cert.profile.dims.rend();
       ++it) {
    if (it->first > 2 && it->second > 0) {
      cert.verdict = Verdict::DerivedSimple;
      cert.witness = {static_cast<index_t>(it->first), it->second};
      return cert;
    }
  }
  cert.candidates = match_b_profiles(cert.profile);
  cert.verdict = cert.candidates.empty()
                     ? Verdict::Inconclusive
                     : Verdict::ConsistentWithQuasiHereditary;
  return cert;
}

// Derived equivalence between the bidirected two-vertex algebras with
// parameters (x, y) and (x2, y2): decided by the invariant system (equal
// products and equal sums of squares; the all-zero case satisfies it
// vacuously), which for non-negative integers pins down the unordered
// pair.  Both readings are computed and must agree.
inline bool b_derived_equivalent(long long x, long long y, long long x2,
                                 long long y2) {
  bool via_system = x * y == x2 * y2 && x * x + y * y == x2 * x2 + y2 * y2;
  bool via_pairs =
      (x == x2 && y == y2) || (x == y2 && y == x2);
  if (via_system != via_pairs)
    throw std::logic_error("invariant system disagrees with unordered-pair "
                           "comparison");
  return via_system;
}

// Does the presentation have the same Hochschild profile as the
// bidirected two-vertex algebra with parameters (x, y)?
inline bool hh_invariance_check(const QuiverPresentation& pres, long long x,
                                long long y) {
  if (pres.vertices.size() != 2)
    throw AlgebraError(ErrorCode::WrongSimpleCount,
                       "profile comparison covers two-vertex algebras");
  return hh_koszul(pres).dims == b_profile(x, y).dims;
}

}  // namespace stratakit
