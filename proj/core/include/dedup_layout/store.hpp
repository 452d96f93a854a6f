#pragma once

#include <vector>

#include "dedup_layout/gf2.hpp"

namespace dedup_layout {

// A linear arrangement of plain chunk copies on the server. Positions are
// 1-based; sequence[j-1] is the chunk id stored at position j.
struct UncodedStore {
    std::vector<int> sequence;

    UncodedStore() = default;
    explicit UncodedStore(std::vector<int> seq) : sequence(std::move(seq)) {}

    int m() const { return static_cast<int>(sequence.size()); }
    int chunk_at(int pos) const { return sequence[pos - 1]; }  // 1-based
    // Every chunk 1..n present and ids in range.
    bool is_lossless(int n) const;
    // Each chunk exactly once.
    bool is_permutation(int n) const;
};

// Identity arrangement (1, 2, ..., n).
UncodedStore identity_store(int n);

// A store of GF(2)-coded chunks: column j describes stored position j as a
// linear combination of the n user chunks (bit i-1 = chunk i).
struct CodedStore {
    int n = 0;
    std::vector<Gf2Vec> columns;

    CodedStore() = default;
    CodedStore(int n_, std::vector<Gf2Vec> cols);

    int m() const { return static_cast<int>(columns.size()); }
    Gf2Vec column(int pos) const { return columns[pos - 1]; }  // 1-based
    int rank() const;
    // Full rank n: every user chunk recoverable from the whole store.
    bool is_lossless() const { return rank() == n; }
    // Count of user chunks combined in the column at pos.
    int column_weight(int pos) const { return gf2_weight(column(pos)); }
};

// Unit-vector embedding of an uncoded store (column j = e_{sequence[j]}).
CodedStore as_coded(const UncodedStore& u, int n);
// Same, with n taken as the largest chunk id present.
CodedStore as_coded(const UncodedStore& u);

// If every column is a unit vector, recover the uncoded sequence; throws
// std::invalid_argument otherwise.
UncodedStore as_uncoded(const CodedStore& c);

// A set of store positions whose columns suffice to reconstruct some target
// chunks. Positions sorted ascending.
struct RecoverySet {
    std::vector<int> positions;

    RecoverySet() = default;
    explicit RecoverySet(std::vector<int> pos);

    bool empty() const { return positions.empty(); }
    int min() const { return positions.front(); }
    int max() const { return positions.back(); }
    // Window length max - min + 1.
    int span() const { return positions.empty() ? 0 : max() - min() + 1; }
    // Number of maximal blocks of consecutive positions.
    int runs() const;

    bool operator==(const RecoverySet& o) const { return positions == o.positions; }
    bool operator<(const RecoverySet& o) const { return positions < o.positions; }
};

}  // namespace dedup_layout
