#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dedup_layout/coded_design.hpp"
#include "dedup_layout/folding.hpp"
#include "dedup_layout/graph.hpp"
#include "dedup_layout/metrics.hpp"
#include "dedup_layout/store.hpp"

namespace dedup_layout {

// Versioned JSON schemas ("dedup-layout/<kind>-v1"). Serializers emit
// pretty-printed documents with a trailing newline; parsers insist on the
// matching "format" tag and throw std::invalid_argument naming the problem.

// Any of the three graph input schemas.
using GraphInput = std::variant<FileGraph, SparseHamiltonianGraph, RootedTree>;

// Expands line+arcs / tree edges into a plain graph.
FileGraph graph_input_to_file_graph(const GraphInput& g);

// 64-bit FNV-1a of raw bytes, rendered "fnv1a64:<16 hex digits>"; used to
// stamp reports with the exact inputs they were computed from.
std::string fnv1a64_hex(const std::string& bytes);

// Whole-file helpers; failures throw std::invalid_argument with the path.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string graph_to_json(const FileGraph& g);
std::string sham_to_json(const SparseHamiltonianGraph& g);
std::string tree_to_json(const RootedTree& t);
std::string store_to_json(const UncodedStore& s);
std::string store_to_json(const CodedStore& c);
std::string store_to_json(const StoreVariant& s);
std::string folding_to_json(const Folding& f);
std::string fold_plan_to_json(const FoldPlan& p);
std::string hk_code_to_json(const HKCode& code);

FileGraph graph_from_json(const std::string& text);
SparseHamiltonianGraph sham_from_json(const std::string& text);
RootedTree tree_from_json(const std::string& text);
// Dispatches on the "format" tag across the three graph schemas.
GraphInput graph_input_from_json(const std::string& text);
StoreVariant store_from_json(const std::string& text);
Folding folding_from_json(const std::string& text);
HKCode hk_code_from_json(const std::string& text);

// Mirrors MetricReport: rationals as "p/q" strings, jump as int or null,
// plus an "inputs" object built from the (label, hash) pairs in order.
std::string report_to_json(const MetricReport& r,
                           const std::vector<std::pair<std::string, std::string>>& input_hashes);

}  // namespace dedup_layout
