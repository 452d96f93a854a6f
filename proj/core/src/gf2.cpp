#include "dedup_layout/gf2.hpp"

#include <array>

namespace dedup_layout {

std::optional<Gf2Solution> gf2_solve(const std::vector<Gf2Vec>& columns,
                                     Gf2Vec target) {
  const int m = static_cast<int>(columns.size());
  if (m > 64) throw std::invalid_argument("gf2_solve: more than 64 columns");

  // Augmented rows over the column-index space: each working row is a pair
  // (combination of original columns as a coefficient mask, resulting vector).
  struct Row {
    Gf2Vec value;           // current reduced column vector
    std::uint64_t coeffs;   // which original columns xor to `value`
  };
  std::vector<Row> basis;   // echelon by decreasing pivot of `value`
  std::vector<std::uint64_t> null_basis;

  for (int j = 0; j < m; ++j) {
    Row r{columns[static_cast<std::size_t>(j)], std::uint64_t{1} << j};
    for (const Row& b : basis) {
      if (r.value != 0 &&
          gf2_max_support(r.value) == gf2_max_support(b.value)) {
        r.value ^= b.value;
        r.coeffs ^= b.coeffs;
      }
    }
    if (r.value == 0) {
      null_basis.push_back(r.coeffs);
      continue;
    }
    auto it = basis.begin();
    while (it != basis.end() &&
           gf2_max_support(it->value) > gf2_max_support(r.value)) {
      ++it;
    }
    basis.insert(it, r);
  }

  Gf2Vec v = target;
  std::uint64_t coeffs = 0;
  for (const Row& b : basis) {
    if (v != 0 && gf2_max_support(v) == gf2_max_support(b.value)) {
      v ^= b.value;
      coeffs ^= b.coeffs;
    }
  }
  if (v != 0) return std::nullopt;
  return Gf2Solution{coeffs, std::move(null_basis)};
}

std::vector<Gf2Vec> gf2_invert(const std::vector<Gf2Vec>& columns) {
  const int n = static_cast<int>(columns.size());
  if (n > 64) throw std::invalid_argument("gf2_invert: dimension > 64");

  // Gauss-Jordan on [A | I] tracked per column.
  std::vector<Gf2Vec> a = columns;
  std::vector<Gf2Vec> inv(a.size());
  for (int j = 0; j < n; ++j) inv[static_cast<std::size_t>(j)] = gf2_unit(j + 1);

  // Work in row space: rows of A^T are the columns; easier to eliminate by
  // treating A as a set of column vectors and pivoting on coordinates.
  for (int i = 1; i <= n; ++i) {
    // Find a column (>= current) with bit i set to act as pivot for coord i.
    int pivot = -1;
    for (int j = i - 1; j < n; ++j) {
      if (a[static_cast<std::size_t>(j)] & gf2_unit(i)) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) throw std::invalid_argument("gf2_invert: singular matrix");
    std::swap(a[static_cast<std::size_t>(pivot)],
              a[static_cast<std::size_t>(i - 1)]);
    std::swap(inv[static_cast<std::size_t>(pivot)],
              inv[static_cast<std::size_t>(i - 1)]);
    for (int j = 0; j < n; ++j) {
      if (j == i - 1) continue;
      if (a[static_cast<std::size_t>(j)] & gf2_unit(i)) {
        a[static_cast<std::size_t>(j)] ^= a[static_cast<std::size_t>(i - 1)];
        inv[static_cast<std::size_t>(j)] ^= inv[static_cast<std::size_t>(i - 1)];
      }
    }
  }
  return inv;
}

}  // namespace dedup_layout
