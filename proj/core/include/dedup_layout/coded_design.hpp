#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dedup_layout/gf2.hpp"
#include "dedup_layout/graph.hpp"
#include "dedup_layout/metrics.hpp"
#include "dedup_layout/store.hpp"

namespace dedup_layout {

// Parity-and-decoding description of a one-redundant-chunk coded store:
// H is the single parity row, K(i) the decoding row of chunk i, all over the
// n+1 store positions (bit j-1 = position j). [H;K] must have full rank.
struct HKCode {
    Gf2Vec H = 0;
    std::vector<Gf2Vec> K;

    int n() const { return static_cast<int>(K.size()); }
    int m() const { return n() + 1; }
};

// True iff the n+1 rows [H; K(1); ...; K(n)] are linearly independent.
bool hk_full_rank(const HKCode& code);

// The store the code describes: position p holds the chunk combination that
// decodes consistently with K (the generator solves G[H;K]^T = [0 | I]).
CodedStore hk_to_generator(const HKCode& code);

// One-redundant-chunk store shaped as plain chunks plus one xor chain:
// chain column i equals x_{b_{i-1}} xor x_{b_i} (ends are plain copies of
// the chain's end chunks), placed at the interleave positions.
struct XorChainStore {
    std::vector<int> a_seq;       // plain chunks, in store order
    std::vector<int> b_seq;       // chained chunks, in chain order
    std::vector<int> interleave;  // strictly increasing positions of the chain columns
};

CodedStore build_xor_chain(const XorChainStore& x);

// Rewrites a full-rank one-redundant-chunk code into the canonical xor-chain
// shape: decoding rows become unit vectors or prefix intervals of H's
// support, then stray columns are cleared. Every recovery interval of the
// output is contained in one of the input's, which callers can audit with
// hk_interval_domination.
HKCode reduce_hk_canonical(const HKCode& code);

// True iff for every chunk, each input recovery window contains an output
// recovery window (positions between the first and last used column).
bool hk_interval_domination(const HKCode& before, const HKCode& after);

// Factor-2 de-coding: trims chain ends whose long-range recovery is already
// useless at the store's own stretch, then replaces each chain column by its
// chunk and drops the final duplicate. The result is a permutation store
// whose stretch is strictly below twice the coded store's, which is checked.
UncodedStore coded_to_uncoded_2approx(const XorChainStore& x, const FileGraph& g, int t);

// De-coding at m = n: matches every chunk to a distinct position of its
// unique minimal recovery set; the resulting permutation recovers every file
// at least as locally as the coded store did.
UncodedStore coded_to_uncoded_matching(const CodedStore& c);

// Jump-metric de-coding at m = n+1: drops the single mixed column (or the
// later duplicate when none is mixed). Costs at most two extra runs on any
// file.
UncodedStore remove_coded_chunk_jump(const CodedStore& c);

using StoreVariant = std::variant<UncodedStore, CodedStore>;

// The xor-chain shape behind the coded fixtures: "example1_coded",
// "example2_coded", "example1j_coded" (N ignored for 1j). Callers that need
// the chain structure (trimming, recovery identities) start here.
XorChainStore example_xor_chain(const std::string& which, int N);

// Fixture stores studied throughout: the three coded fixtures above plus
// "example1_uncoded_2dup" and "example1_mn" (N >= 1, for the 8N+2-vertex
// near-line graph).
StoreVariant build_example_store(const std::string& which, int N);

}  // namespace dedup_layout
