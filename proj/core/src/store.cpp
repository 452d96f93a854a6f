#include "dedup_layout/store.hpp"

#include <algorithm>
#include <stdexcept>

namespace dedup_layout {

bool UncodedStore::is_lossless(int n) const {
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int c : sequence) {
        if (c < 1 || c > n) return false;
        seen[static_cast<size_t>(c)] = 1;
    }
    for (int i = 1; i <= n; ++i)
        if (!seen[static_cast<size_t>(i)]) return false;
    return true;
}

bool UncodedStore::is_permutation(int n) const {
    return m() == n && is_lossless(n);
}

UncodedStore identity_store(int n) {
    std::vector<int> seq(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) seq[static_cast<size_t>(i - 1)] = i;
    return UncodedStore(std::move(seq));
}

CodedStore::CodedStore(int n_, std::vector<Gf2Vec> cols) : n(n_), columns(std::move(cols)) {
    if (n < 0 || n > 64) throw std::invalid_argument("coded store: n out of range [0,64]");
    const Gf2Vec mask = (n == 64) ? ~Gf2Vec{0} : ((Gf2Vec{1} << n) - 1);
    for (Gf2Vec c : columns)
        if (c & ~mask) throw std::invalid_argument("coded store: column references chunk beyond n");
}

int CodedStore::rank() const {
    Gf2Basis basis;
    for (Gf2Vec c : columns) basis.insert(c);
    return basis.rank();
}

CodedStore as_coded(const UncodedStore& u, int n) {
    if (!u.is_lossless(n) && !u.sequence.empty()) {
        // Still allow embedding of partial stores; only range-check ids.
        for (int c : u.sequence)
            if (c < 1 || c > n) throw std::invalid_argument("as_coded: chunk id out of range");
    }
    std::vector<Gf2Vec> cols;
    cols.reserve(u.sequence.size());
    for (int c : u.sequence) cols.push_back(gf2_unit(c));
    return CodedStore(n, std::move(cols));
}

CodedStore as_coded(const UncodedStore& u) {
    int n = 0;
    for (int c : u.sequence) n = std::max(n, c);
    return as_coded(u, n);
}

UncodedStore as_uncoded(const CodedStore& c) {
    std::vector<int> seq;
    seq.reserve(c.columns.size());
    for (Gf2Vec col : c.columns) {
        if (gf2_weight(col) != 1)
            throw std::invalid_argument("as_uncoded: store has a non-unit column");
        seq.push_back(gf2_min_support(col));
    }
    return UncodedStore(std::move(seq));
}

RecoverySet::RecoverySet(std::vector<int> pos) : positions(std::move(pos)) {
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
}

int RecoverySet::runs() const {
    if (positions.empty()) return 0;
    int r = 1;
    for (size_t i = 1; i < positions.size(); ++i)
        if (positions[i] != positions[i - 1] + 1) ++r;
    return r;
}

}  // namespace dedup_layout
