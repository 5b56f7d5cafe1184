#pragma once

// Cochain complexes with exact integer differentials, plus the graded
// two-term complex used for graded Kronecker algebras.

#include <optional>
#include <map>
#include <vector>

#include "stratakit/matrix.hpp"
#include "stratakit/quiver.hpp"

namespace stratakit {

// Positions 0..dims.size()-1; differentials[p] maps position p to p+1 and is
// stored as one sparse column per basis slot of position p.
struct CochainComplex {
  std::vector<index_t> dims;
  std::vector<std::vector<SparseZColumn>> differentials;

  index_t positions() const { return static_cast<index_t>(dims.size()); }

  const std::vector<SparseZColumn>* differential(index_t p) const {
    if (p < 0 || p >= static_cast<index_t>(differentials.size()))
      return nullptr;
    return &differentials[static_cast<std::size_t>(p)];
  }
};

// d^{p+1} composed with d^p must vanish identically.
inline bool verify_complex(const CochainComplex& cx) {
  for (std::size_t p = 0; p + 1 < cx.differentials.size(); ++p) {
    const auto& d0 = cx.differentials[p];
    const auto& d1 = cx.differentials[p + 1];
    for (const auto& col : d0) {
      std::map<index_t, Int> acc;
      for (const auto& [row, val] : col) {
        if (row >= static_cast<index_t>(d1.size()))
          return false;  // shape mismatch
        for (const auto& [row2, val2] : d1[static_cast<std::size_t>(row)])
          acc[row2] += val * val2;
      }
      for (const auto& [row, val] : acc)
        if (val != 0) return false;
    }
  }
  return true;
}

inline index_t complex_rank(const CochainComplex& cx, index_t p) {
  const auto* d = cx.differential(p);
  if (!d) return 0;
  index_t rows = p + 1 < cx.positions()
                     ? cx.dims[static_cast<std::size_t>(p + 1)]
                     : 0;
  if (rows == 0) return 0;
  return integer_column_rank(rows, *d);
}

// dim H^p = dim C^p - rank d^p - rank d^{p-1}
inline std::vector<index_t> cohomology_dims(const CochainComplex& cx) {
  std::vector<index_t> out(cx.dims.size(), 0);
  std::vector<index_t> ranks(cx.dims.size(), 0);
  for (index_t p = 0; p < cx.positions(); ++p) ranks[static_cast<std::size_t>(p)] = complex_rank(cx, p);
  for (index_t p = 0; p < cx.positions(); ++p) {
    index_t h = cx.dims[static_cast<std::size_t>(p)] -
                ranks[static_cast<std::size_t>(p)];
    if (p > 0) h -= ranks[static_cast<std::size_t>(p - 1)];
    out[static_cast<std::size_t>(p)] = h;
  }
  return out;
}

inline Int euler_characteristic(const CochainComplex& cx) {
  Int chi = 0;
  int sign = 1;
  for (auto d : cx.dims) {
    chi += sign * Int(d);
    sign = -sign;
  }
  return chi;
}

// Two-term complex g: position 0 -> position 1 whose slots carry internal
// degrees; cohomology is read off per total degree (= position + internal
// degree).
struct GradedTwoTermComplex {
  std::vector<int> degrees0;  // internal degrees of position-0 slots
  std::vector<int> degrees1;
  std::vector<SparseZColumn> g;  // one column per position-0 slot

  // dims of H^p per total degree p, zeros omitted
  std::map<int, Int> cohomology_by_total_degree() const {
    std::map<int, Int> out;
    // kernel of g contributes at total degree = internal degree of the slot;
    // computed per degree block of the domain
    std::map<int, std::vector<std::size_t>> dom_blocks;
    for (std::size_t i = 0; i < degrees0.size(); ++i)
      dom_blocks[degrees0[i]].push_back(i);
    for (const auto& [deg, slots] : dom_blocks) {
      std::vector<SparseZColumn> cols;
      cols.reserve(slots.size());
      for (auto s : slots) cols.push_back(g[s]);
      index_t r = degrees1.empty()
                      ? 0
                      : integer_column_rank(
                            static_cast<index_t>(degrees1.size()), cols);
      Int ker = Int(slots.size()) - r;
      if (ker != 0) out[deg + 0] += ker;
    }
    // cokernel at position 1: per total degree, slots of that degree minus
    // the rank of g projected to those rows
    std::map<int, std::vector<index_t>> cod_rows;
    for (std::size_t i = 0; i < degrees1.size(); ++i)
      cod_rows[degrees1[i]].push_back(static_cast<index_t>(i));
    for (const auto& [deg, rows] : cod_rows) {
      std::unordered_map<index_t, index_t> row_id;
      for (std::size_t k = 0; k < rows.size(); ++k)
        row_id[rows[k]] = static_cast<index_t>(k);
      std::vector<SparseZColumn> cols;
      for (const auto& col : g) {
        SparseZColumn proj;
        for (const auto& [row, val] : col) {
          auto it = row_id.find(row);
          if (it != row_id.end()) proj.emplace_back(it->second, val);
        }
        if (!proj.empty()) cols.push_back(std::move(proj));
      }
      index_t r = cols.empty() ? 0
                               : integer_column_rank(
                                     static_cast<index_t>(rows.size()), cols);
      Int coker = Int(rows.size()) - r;
      if (coker != 0) out[deg + 1] += coker;
    }
    std::map<int, Int> cleaned;
    for (const auto& [deg, val] : out)
      if (val != 0) cleaned[deg] = val;
    return cleaned;
  }
};

}  // namespace stratakit
