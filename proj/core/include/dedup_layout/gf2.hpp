#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dedup_layout {

// GF(2) column vectors over up to 64 coordinates, packed into a uint64 mask.
// Coordinate i (1-based chunk index) corresponds to bit (i-1).
using Gf2Vec = std::uint64_t;

constexpr Gf2Vec gf2_unit(int i) { return Gf2Vec{1} << (i - 1); }

inline int gf2_weight(Gf2Vec v) { return std::popcount(v); }

// 1-based index of the lowest set bit; 0 for the zero vector.
inline int gf2_min_support(Gf2Vec v) {
  return v == 0 ? 0 : std::countr_zero(v) + 1;
}

// 1-based index of the highest set bit; 0 for the zero vector.
inline int gf2_max_support(Gf2Vec v) {
  return v == 0 ? 0 : 64 - std::countl_zero(v);
}

// Incremental row-echelon basis for spans of Gf2Vec.
class Gf2Basis {
 public:
  // Reduces v against the basis; returns the residual (0 iff v is in the span).
  [[nodiscard]] Gf2Vec reduce(Gf2Vec v) const {
    for (const Gf2Vec b : rows_) {
      if (gf2_max_support(v) == gf2_max_support(b)) v ^= b;
    }
    return v;
  }

  [[nodiscard]] bool contains(Gf2Vec v) const {
    for (const Gf2Vec b : rows_) {
      if (v == 0) return true;
      if (gf2_max_support(v) == gf2_max_support(b)) v ^= b;
    }
    return v == 0;
  }

  // Inserts v; returns false if v was already in the span.
  bool insert(Gf2Vec v) {
    for (const Gf2Vec b : rows_) {
      if (gf2_max_support(v) == gf2_max_support(b)) v ^= b;
    }
    if (v == 0) return false;
    // Keep rows_ sorted by decreasing pivot so reduction is a single pass.
    auto it = rows_.begin();
    while (it != rows_.end() && gf2_max_support(*it) > gf2_max_support(v)) {
      ++it;
    }
    rows_.insert(it, v);
    return true;
  }

  [[nodiscard]] int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<Gf2Vec> rows_;  // sorted by decreasing pivot position
};

// Solution of columns * a = target over GF(2), where `columns` has m columns
// of height n.  `particular` is one solution (bit j set = column j+1 used);
// `null_basis` spans all homogeneous solutions, so the full solution coset is
// { particular ^ xor-of-subset(null_basis) } (2^nullity elements).
struct Gf2Solution {
  std::uint64_t particular = 0;
  std::vector<std::uint64_t> null_basis;
};

// Gaussian elimination on the n x m system.  Returns nullopt when `target`
// is not in the column span.  m <= 64 and n <= 64.
std::optional<Gf2Solution> gf2_solve(const std::vector<Gf2Vec>& columns,
                                     Gf2Vec target);

// Inverse of a square GF(2) matrix given as columns (column j = image of unit
// j+1).  Throws std::invalid_argument when singular.
std::vector<Gf2Vec> gf2_invert(const std::vector<Gf2Vec>& columns);

// Transpose of a matrix given as `columns` with `rows` coordinates each;
// returns `rows` columns of height columns.size().
inline std::vector<Gf2Vec> gf2_transpose(const std::vector<Gf2Vec>& columns,
                                         int rows) {
  std::vector<Gf2Vec> out(static_cast<std::size_t>(rows), 0);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (int i = 1; i <= rows; ++i) {
      if (columns[j] & gf2_unit(i)) {
        out[static_cast<std::size_t>(i - 1)] |=
            gf2_unit(static_cast<int>(j) + 1);
      }
    }
  }
  return out;
}

}  // namespace dedup_layout
