#pragma once

// Constructors for the named algebra families and the generalized Fibonacci
// sequence that governs their Cartan matrices.

#include <string>
#include <vector>

#include "stratakit/quiver.hpp"

namespace stratakit {

using IntSeq = std::vector<long long>;

// F_0 = 0, F_1 = 1, F_{2m} = F_{2m-2} + F_{2m-1} x_m,
// F_{2m+1} = F_{2m-1} + F_{2m} y_m.  All-ones input gives the usual
// Fibonacci numbers.
struct FibonacciSeq {
  IntSeq xs, ys;
  std::vector<Int> values;  // F_0 .. F_N

  const Int& F(std::size_t k) const { return values.at(k); }
};

inline FibonacciSeq fibonacci(const IntSeq& xs, const IntSeq& ys,
                              std::size_t N) {
  // F_{2m} consumes x_m, F_{2m+1} consumes y_m; sequences must reach that far
  std::size_t need_x = N / 2;
  std::size_t need_y = N >= 1 ? (N - 1) / 2 : 0;
  if (xs.size() < need_x || ys.size() < need_y)
    throw AlgebraError(ErrorCode::DomainError,
                       "parameter sequences too short for requested index");
  FibonacciSeq out;
  out.xs = xs;
  out.ys = ys;
  out.values.resize(N + 1);
  for (std::size_t k = 0; k <= N; ++k) {
    if (k == 0) {
      out.values[k] = 0;
    } else if (k == 1) {
      out.values[k] = 1;
    } else if (k % 2 == 0) {
      std::size_t m = k / 2;
      out.values[k] = out.values[k - 2] + out.values[k - 1] * Int(xs[m - 1]);
    } else {
      std::size_t m = (k - 1) / 2;
      out.values[k] = out.values[k - 2] + out.values[k - 1] * Int(ys[m - 1]);
    }
  }
  return out;
}

inline IntSeq shift(const IntSeq& seq) {
  if (seq.empty()) return {};
  return IntSeq(seq.begin() + 1, seq.end());
}

// Two vertices; x arrows 1 -> 2, y arrows 2 -> 1; every path through
// vertex 2 and back (b after a) is a relation.  x = y = 0 gives the product
// of two copies of the base field.
inline QuiverPresentation build_B(long long x, long long y) {
  if (x < 0 || y < 0)
    throw AlgebraError(ErrorCode::DomainError, "arrow counts must be >= 0");
  QuiverPresentation p;
  p.vertices = {"1", "2"};
  for (long long i = 1; i <= x; ++i)
    p.arrows.push_back({"a." + std::to_string(i), "1", "2", 0});
  for (long long j = 1; j <= y; ++j)
    p.arrows.push_back({"b." + std::to_string(j), "2", "1", 0});
  for (long long j = 1; j <= y; ++j)
    for (long long i = 1; i <= x; ++i)
      p.relations.emplace_back("b." + std::to_string(j),
                               "a." + std::to_string(i));
  return validate(p);
}

// Graded Kronecker quiver: one arrow 1 -> 2 per multiset element, carrying
// that internal degree; no relations.  Labels g.k in ascending degree order.
inline QuiverPresentation build_Lambda(std::vector<int> degree_multiset) {
  std::sort(degree_multiset.begin(), degree_multiset.end());
  QuiverPresentation p;
  p.vertices = {"1", "2"};
  for (std::size_t k = 0; k < degree_multiset.size(); ++k)
    p.arrows.push_back(
        {"g." + std::to_string(k + 1), "1", "2", degree_multiset[k]});
  return validate(p);
}

// The graded Kronecker algebra with the same homological invariants as
// build_B(x, y): y arrows in degree 0 and x arrows in degree 1.
inline QuiverPresentation lambda_for_B(long long x, long long y) {
  if (x < 0 || y < 0)
    throw AlgebraError(ErrorCode::DomainError, "arrow counts must be >= 0");
  if (x + y == 0)
    throw AlgebraError(ErrorCode::Degenerate,
                       "x = y = 0 has no Kronecker model");
  std::vector<int> degrees;
  for (long long q = 0; q < y; ++q) degrees.push_back(0);
  for (long long q = 0; q < x; ++q) degrees.push_back(1);
  return build_Lambda(degrees);
}

// Two vertices; arrow batches alternate direction: stage i adds x_i arrows
// a.i.j : 1 -> 2, then y_i arrows b.i.j : 2 -> 1, until n batches exist in
// total.  Relations: (a.i.j, b.i'.j') for i' < i and (b.i'.j', a.i.j) for
// i <= i'.  Dropping the last batch recovers the previous member, so each
// presentation extends the one before it.
inline QuiverPresentation build_An(long long n, const IntSeq& xs,
                                   const IntSeq& ys) {
  if (n < 0)
    throw AlgebraError(ErrorCode::DomainError, "family index must be >= 0");
  const std::size_t alpha_stages = static_cast<std::size_t>((n + 1) / 2);
  const std::size_t beta_stages = static_cast<std::size_t>(n / 2);
  if (xs.size() < alpha_stages || ys.size() < beta_stages)
    throw AlgebraError(ErrorCode::DomainError,
                       "parameter sequences too short for requested index");
  for (std::size_t i = 0; i < alpha_stages; ++i)
    if (xs[i] < 1)
      throw AlgebraError(ErrorCode::DomainError,
                         "multiplicities must be >= 1");
  for (std::size_t i = 0; i < beta_stages; ++i)
    if (ys[i] < 1)
      throw AlgebraError(ErrorCode::DomainError,
                         "multiplicities must be >= 1");
  QuiverPresentation p;
  p.vertices = {"1", "2"};
  auto alpha = [](std::size_t i, long long j) {
    return "a." + std::to_string(i) + "." + std::to_string(j);
  };
  auto beta = [](std::size_t i, long long j) {
    return "b." + std::to_string(i) + "." + std::to_string(j);
  };
  for (std::size_t stage = 1; stage <= alpha_stages || stage <= beta_stages;
       ++stage) {
    if (stage <= alpha_stages)
      for (long long j = 1; j <= xs[stage - 1]; ++j)
        p.arrows.push_back({alpha(stage, j), "1", "2", 0});
    if (stage <= beta_stages)
      for (long long j = 1; j <= ys[stage - 1]; ++j)
        p.arrows.push_back({beta(stage, j), "2", "1", 0});
  }
  for (std::size_t i = 1; i <= alpha_stages; ++i) {
    for (long long j = 1; j <= xs[i - 1]; ++j) {
      for (std::size_t ip = 1; ip <= beta_stages; ++ip) {
        for (long long jp = 1; jp <= ys[ip - 1]; ++jp) {
          if (ip < i) p.relations.emplace_back(alpha(i, j), beta(ip, jp));
          if (i <= ip) p.relations.emplace_back(beta(ip, jp), alpha(i, j));
        }
      }
    }
  }
  return validate(p);
}

// Closed form for cartan_matrix(build_An(n, xs, ys)): entries are
// generalized Fibonacci numbers in (ys, shift(xs)) on the first row and in
// (xs, ys) on the second, staggered by the parity of n.
inline CartanMatrix an_cartan_formula(long long n, const IntSeq& xs,
                                      const IntSeq& ys) {
  CartanMatrix c;
  c.entries.assign(2, std::vector<Int>(2, 0));
  if (n < 0)
    throw AlgebraError(ErrorCode::DomainError, "family index must be >= 0");
  if (n == 0) {
    c.entries[0][0] = 1;
    c.entries[1][1] = 1;
    return c;
  }
  const auto N = static_cast<std::size_t>(n);
  FibonacciSeq fxy = fibonacci(xs, ys, N + 1);
  FibonacciSeq fys = fibonacci(ys, shift(xs), N);
  if (n % 2 == 0) {
    c.entries[0][0] = fys.F(N - 1);
    c.entries[0][1] = fys.F(N);
    c.entries[1][0] = fxy.F(N);
    c.entries[1][1] = fxy.F(N + 1);
  } else {
    c.entries[0][0] = fys.F(N);
    c.entries[0][1] = fys.F(N - 1);
    c.entries[1][0] = fxy.F(N + 1);
    c.entries[1][1] = fxy.F(N);
  }
  return c;
}

enum class FamilyKind { B, Lambda, An };

struct FamilyParams {
  FamilyKind kind = FamilyKind::B;
  IntSeq x_seq, y_seq;
  long long n = 0;
  std::vector<int> degree_multiset;
};

inline QuiverPresentation build(const FamilyParams& params) {
  switch (params.kind) {
    case FamilyKind::B: {
      long long x = params.x_seq.empty() ? 0 : params.x_seq.front();
      long long y = params.y_seq.empty() ? 0 : params.y_seq.front();
      return build_B(x, y);
    }
    case FamilyKind::Lambda:
      return build_Lambda(params.degree_multiset);
    case FamilyKind::An:
      return build_An(params.n, params.x_seq, params.y_seq);
  }
  throw AlgebraError(ErrorCode::DomainError, "unknown family kind");
}

}  // namespace stratakit
