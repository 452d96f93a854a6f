// Command-line front end: generate fixture graphs and stores, compute
// layouts, evaluate stores, canonicalize codes, and audit everything against
// the exact brute-force oracles. All documents are versioned JSON; reports
// embed FNV-1a hashes of their inputs.
//
// Exit codes: 0 success, 1 violated bound or broken internal guarantee,
// 2 malformed input or input outside supported sizes.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dedup_layout/coded_design.hpp"
#include "dedup_layout/examples.hpp"
#include "dedup_layout/folding.hpp"
#include "dedup_layout/gf2.hpp"
#include "dedup_layout/graph.hpp"
#include "dedup_layout/json_io.hpp"
#include "dedup_layout/jump_tree.hpp"
#include "dedup_layout/metrics.hpp"
#include "dedup_layout/oracle.hpp"
#include "dedup_layout/rational.hpp"
#include "dedup_layout/store.hpp"
#include "dedup_layout/zero_frag.hpp"

namespace dl = dedup_layout;

namespace {

using json = nlohmann::ordered_json;

struct LoadedText {
    std::string text;
    std::string hash;
};

LoadedText load(const std::string& path) {
    std::string text = dl::read_text_file(path);
    std::string hash = dl::fnv1a64_hex(text);
    return {std::move(text), std::move(hash)};
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        dl::write_text_file(out_path, text);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
    json arr = json::array();
    for (const auto& [u, v] : pairs) arr.push_back(json::array({u, v}));
    return arr;
}

std::string join_dash(const std::vector<int>& vs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out << '-';
        out << vs[i];
    }
    return out.str();
}

// ---------------------------------------------------------------- gen

int run_gen(const std::string& family, const std::string& store_name, std::optional<int> big_n,
            std::optional<int> k, std::optional<int> n, const std::string& out_path) {
    if (family.empty() == store_name.empty())
        throw std::invalid_argument("gen: pass exactly one of --family and --store");
    if (!store_name.empty()) {
        emit(out_path, dl::store_to_json(dl::build_example_store(store_name, big_n.value_or(1))));
        return 0;
    }
    std::vector<int> params;
    auto need = [&](const std::optional<int>& v, const char* flag) {
        if (!v)
            throw std::invalid_argument("gen: family '" + family + "' requires " + flag);
        params.push_back(*v);
    };
    if (family == "example1" || family == "example2") {
        need(big_n, "--N");
    } else if (family == "cycle_odd" || family == "path") {
        need(n, "--n");
    } else if (family == "rainbow" || family == "long_arc") {
        need(k, "--k");
        need(n, "--n");
    }
    const dl::ExampleGraph g = dl::gen_example(family, params);
    std::string text;
    if (const auto* fg = std::get_if<dl::FileGraph>(&g))
        text = dl::graph_to_json(*fg);
    else if (const auto* sh = std::get_if<dl::SparseHamiltonianGraph>(&g))
        text = dl::sham_to_json(*sh);
    else
        text = dl::tree_to_json(std::get<dl::RootedTree>(g));
    emit(out_path, text);
    return 0;
}

// ---------------------------------------------------------------- eval

int run_eval(const std::string& store_path, const std::string& graph_path, int t,
             const std::string& out_path, const std::string& csv_path, bool with_jump) {
    const LoadedText ls = load(store_path);
    const LoadedText lg = load(graph_path);
    const dl::StoreVariant sv = dl::store_from_json(ls.text);
    const dl::FileGraph g = dl::graph_input_to_file_graph(dl::graph_input_from_json(lg.text));
    const dl::MetricReport report =
        std::visit([&](const auto& s) { return dl::evaluate(s, g, t, with_jump); }, sv);
    emit(out_path, dl::report_to_json(report, {{"graph", lg.hash}, {"store", ls.hash}}));
    if (!csv_path.empty()) {
        std::ostringstream csv;
        csv << "path,length,stretch,jump\n";
        for (const dl::PathMetrics& pm : report.per_path) {
            csv << join_dash(pm.path.vertices) << ',' << pm.path.length() << ','
                << pm.stretch.str() << ',';
            if (pm.jump.has_value()) csv << *pm.jump;
            csv << '\n';
        }
        dl::write_text_file(csv_path, csv.str());
    }
    return 0;
}

// ------------------------------------------------------- layout-stretch

int run_layout_stretch(const std::string& sham_path, const std::string& out_path,
                       const std::string& plan_path, const std::string& folding_path) {
    const LoadedText lg = load(sham_path);
    const dl::SparseHamiltonianGraph g = dl::sham_from_json(lg.text);
    const dl::ShamLayout layout = dl::layout_sham(g);
    json doc = json::parse(dl::store_to_json(layout.store));
    doc["displacement"] = layout.displacement;
    doc["bound"] = dl::sham_displacement_bound(g.arc_count());
    doc["strategy"] = layout.strategy;
    doc["used_decision_search"] = layout.used_decision_search;
    doc["inputs"]["sham"] = lg.hash;
    emit(out_path, dump(doc));

    if (!plan_path.empty() || !folding_path.empty()) {
        // The plan artifacts describe the grouped fold of the uniform-parity
        // graph (the input itself, or its split-line double).
        const std::vector<int> feet = g.arc_feet();
        bool uniform = true;
        for (std::size_t i = 1; i < feet.size(); ++i)
            if ((feet[i] & 1) != (feet[0] & 1)) uniform = false;
        const dl::SparseHamiltonianGraph target = uniform ? g : dl::double_graph(g);
        const dl::FoldPlan plan = dl::compute_fold_plan(target, dl::group_arc_feet(target));
        if (!plan_path.empty()) dl::write_text_file(plan_path, dl::fold_plan_to_json(plan));
        if (!folding_path.empty())
            dl::write_text_file(folding_path,
                                dl::folding_to_json(dl::plan_to_folding(plan, target.n())));
    }
    return layout.displacement <= dl::sham_displacement_bound(g.arc_count()) ? 0 : 1;
}

// ---------------------------------------------------------- layout-jump

dl::RootedTree reroot(const dl::RootedTree& t, int new_root) {
    const dl::FileGraph g = t.to_file_graph();
    if (new_root < 1 || new_root > g.n())
        throw std::invalid_argument("--root must be a vertex in [1, n]");
    std::vector<int> parent(static_cast<std::size_t>(g.n()) + 1, 0);
    std::vector<bool> seen(static_cast<std::size_t>(g.n()) + 1, false);
    std::vector<int> queue{new_root};
    seen[static_cast<std::size_t>(new_root)] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w : g.neighbors(queue[head]))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                parent[static_cast<std::size_t>(w)] = queue[head];
                queue.push_back(w);
            }
    return dl::RootedTree(g.n(), new_root, std::move(parent));
}

// Jump metric of a permutation store over every file of the tree: each path
// has a unique recovery set (its own positions), so the metric is the worst
// run count over all simple paths.
int permutation_jump_metric(const dl::UncodedStore& s, const dl::FileGraph& g) {
    std::vector<int> pos(static_cast<std::size_t>(g.n()) + 1, 0);
    for (int i = 1; i <= s.m(); ++i) pos[static_cast<std::size_t>(s.chunk_at(i))] = i;
    int worst = 0;
    for (const dl::Path& p : dl::enumerate_paths(g, g.n())) {
        std::vector<int> ps;
        ps.reserve(p.vertices.size());
        for (int v : p.vertices) ps.push_back(pos[static_cast<std::size_t>(v)]);
        worst = std::max(worst, dl::RecoverySet(std::move(ps)).runs());
    }
    return worst;
}

int run_layout_jump(const std::string& tree_path, std::optional<int> root_override,
                    const std::string& algo, const std::string& out_path) {
    const LoadedText lt = load(tree_path);
    dl::RootedTree tree = dl::tree_from_json(lt.text);
    if (root_override.has_value()) tree = reroot(tree, *root_override);

    dl::UncodedStore store;
    dl::UPathDecomposition decomposition;
    if (algo == "min-uf") {
        dl::DecompositionResult res = dl::min_max_decomposition(tree);
        decomposition = std::move(res.decomposition);
        store = dl::linearize_decomposition(decomposition);
    } else if (algo == "caterpillar") {
        store = dl::caterpillar_layout(tree);
        decomposition = dl::decomposition_from_store(tree, store);
    } else if (algo == "two-hair") {
        store = dl::two_hair_layout(tree);
        decomposition = dl::decomposition_from_store(tree, store);
    } else {
        throw std::invalid_argument("--layout must be min-uf, caterpillar, or two-hair");
    }

    json doc = json::parse(dl::store_to_json(store));
    doc["uf"] = dl::max_unidirectional_fragments(decomposition, tree);
    doc["decomposition"] = decomposition.paths;
    doc["jump_metric"] = permutation_jump_metric(store, tree.to_file_graph());
    doc["inputs"]["tree"] = lt.hash;
    emit(out_path, dump(doc));
    return 0;
}

// -------------------------------------------------------------- zerofrag

int run_zerofrag(const std::string& graph_path, int t, const std::string& out_path) {
    const LoadedText lg = load(graph_path);
    const dl::FileGraph g = dl::graph_input_to_file_graph(dl::graph_input_from_json(lg.text));
    if (t < 2) throw std::invalid_argument("--t must be at least 2");
    json doc;
    if (t == 2) {
        const dl::ZeroFragResult res = dl::zero_frag_t2(g);
        doc = json::parse(dl::store_to_json(res.store));
        doc["length"] = res.store.m();
        doc["formula_upper_bound"] = res.formula_upper_bound;
        doc["added_edges"] = pairs_json(res.added_edges);
    } else {
        const dl::UncodedStore s = dl::zero_frag_general(g, t);
        const std::size_t paths = dl::enumerate_paths(g, t).size();
        doc = json::parse(dl::store_to_json(s));
        doc["length"] = s.m();
        doc["path_count"] = paths;
        doc["length_lower_bound"] =
            dl::Rational(static_cast<std::int64_t>(paths), t).str();
        doc["length_upper_bound"] = static_cast<std::int64_t>(paths) * t;
    }
    doc["inputs"]["graph"] = lg.hash;
    emit(out_path, dump(doc));
    return 0;
}

// ----------------------------------------------------------- reduce-code

int coset_interval(const dl::HKCode& code, int chunk) {
    const dl::Gf2Vec a = code.K[static_cast<std::size_t>(chunk - 1)];
    const dl::Gf2Vec b = a ^ code.H;
    auto span = [](dl::Gf2Vec v) {
        return dl::gf2_max_support(v) - dl::gf2_min_support(v) + 1;
    };
    if (a == 0) return span(b);
    if (b == 0) return span(a);
    return std::min(span(a), span(b));
}

int run_reduce_code(const std::string& in_path, const std::string& out_path) {
    const LoadedText lc = load(in_path);
    const dl::HKCode input = dl::hk_code_from_json(lc.text);
    const dl::HKCode canon = dl::reduce_hk_canonical(input);

    json doc = json::parse(dl::hk_code_to_json(canon));
    json audit = json::array();
    bool all_dominated = true;
    for (int i = 1; i <= input.n(); ++i) {
        const int before = coset_interval(input, i);
        const int after = coset_interval(canon, i);
        all_dominated = all_dominated && after <= before;
        json row;
        row["chunk"] = i;
        row["input_interval"] = before;
        row["canonical_interval"] = after;
        row["dominated"] = after <= before;
        audit.push_back(std::move(row));
    }
    const bool windows_nested = dl::hk_interval_domination(input, canon);
    doc["audit"] = std::move(audit);
    doc["all_dominated"] = all_dominated;
    doc["windows_nested"] = windows_nested;
    doc["canonical_store"] =
        json::parse(dl::store_to_json(dl::StoreVariant(dl::hk_to_generator(canon))));
    doc["inputs"]["code"] = lc.hash;
    emit(out_path, dump(doc));
    return (all_dominated && windows_nested) ? 0 : 1;
}

// ---------------------------------------------------------------- oracle

int run_oracle(const std::string& graph_path, const std::string& what, int t,
               std::optional<int> m, int jobs, const std::string& out_path) {
    const LoadedText lg = load(graph_path);
    const dl::GraphInput gi = dl::graph_input_from_json(lg.text);
    json doc;
    doc["format"] = "dedup-layout/oracle-v1";
    doc["what"] = what;
    std::string value_line;
    if (what == "uf") {
        const auto* tree = std::get_if<dl::RootedTree>(&gi);
        if (tree == nullptr)
            throw std::invalid_argument("oracle --what uf needs a dedup-layout/tree-v1 input");
        const int v = dl::exact_min_max_uf(*tree);
        value_line = std::to_string(v);
        doc["value"] = v;
    } else if (what == "bandwidth") {
        const dl::BandwidthResult res = dl::exact_bandwidth(dl::graph_input_to_file_graph(gi));
        value_line = std::to_string(res.bandwidth);
        doc["value"] = res.bandwidth;
        doc["arrangement"] = res.arrangement.sequence;
    } else if (what == "stretch") {
        const dl::FileGraph g = dl::graph_input_to_file_graph(gi);
        const dl::StretchOracleResult res = dl::exact_stretch(g, t, m.value_or(g.n()), jobs);
        value_line = res.value.str();
        doc["t"] = t;
        doc["m"] = m.value_or(g.n());
        doc["value"] = res.value.str();
        doc["store"] = res.store.sequence;
    } else if (what == "jump") {
        const dl::FileGraph g = dl::graph_input_to_file_graph(gi);
        const dl::JumpOracleResult res = dl::exact_jump(g, t, m.value_or(g.n()), jobs);
        value_line = std::to_string(res.value);
        doc["t"] = t;
        doc["m"] = m.value_or(g.n());
        doc["value"] = res.value;
        doc["store"] = res.store.sequence;
    } else if (what == "zerofrag") {
        const int v = dl::exact_zero_frag_length(dl::graph_input_to_file_graph(gi), t);
        value_line = std::to_string(v);
        doc["t"] = t;
        doc["value"] = v;
    } else {
        throw std::invalid_argument("--what must be bandwidth, stretch, jump, zerofrag, or uf");
    }
    std::cout << value_line << "\n";
    if (!out_path.empty()) {
        doc["inputs"]["graph"] = lg.hash;
        dl::write_text_file(out_path, dump(doc));
    }
    return 0;
}

// -------------------------------------------------------- paper-examples

struct FixtureRow {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass;
};

void add_eq(std::vector<FixtureRow>& rows, std::string name, const std::string& expected,
            const std::string& actual) {
    rows.push_back({std::move(name), expected, actual, expected == actual});
}

void add_le(std::vector<FixtureRow>& rows, std::string name, int bound, int actual) {
    rows.push_back({std::move(name), "<= " + std::to_string(bound), std::to_string(actual),
                    actual <= bound});
}

std::string column_name(dl::Gf2Vec column) {
    std::string out;
    for (int i = dl::gf2_min_support(column); i <= dl::gf2_max_support(column); ++i)
        if ((column >> (i - 1)) & 1u) {
            if (!out.empty()) out += "^";
            out += "x" + std::to_string(i);
        }
    return out;
}

std::string store_signature(const dl::CodedStore& c) {
    std::string out;
    for (int p = 1; p <= c.m(); ++p) {
        if (p > 1) out += " ";
        out += column_name(c.column(p));
    }
    return out;
}

std::vector<FixtureRow> run_fixtures() {
    std::vector<FixtureRow> rows;

    // Near-line hub graph, three stores, exact stretch values.
    for (int N = 1; N <= 3; ++N) {
        const dl::FileGraph g = dl::make_example1(N);
        const std::string suffix = " (N=" + std::to_string(N) + ")";
        const auto coded =
            std::get<dl::CodedStore>(dl::build_example_store("example1_coded", N));
        add_eq(rows, "example1 coded stretch" + suffix, dl::Rational(2 * N + 2, 2).str(),
               dl::evaluate(coded, g, 2, false).stretch_metric.str());
        const auto two_dup =
            std::get<dl::UncodedStore>(dl::build_example_store("example1_uncoded_2dup", N));
        add_eq(rows, "example1 two-duplicate stretch" + suffix, dl::Rational(2 * N + 2, 2).str(),
               dl::evaluate(two_dup, g, 2, false).stretch_metric.str());
        const auto mn = std::get<dl::UncodedStore>(dl::build_example_store("example1_mn", N));
        add_eq(rows, "example1 m=n stretch" + suffix, dl::Rational(3 * N + 2, 2).str(),
               dl::evaluate(mn, g, 2, false).stretch_metric.str());
    }

    // Clique-of-hubs graph: one-redundant coded store and its chain algebra.
    for (int N = 1; N <= 3; ++N) {
        const dl::FileGraph g = dl::make_example2(N);
        const std::string suffix = " (N=" + std::to_string(N) + ")";
        const dl::XorChainStore x = dl::example_xor_chain("example2_coded", N);
        const dl::CodedStore coded = dl::build_xor_chain(x);
        add_eq(rows, "example2 coded stretch" + suffix, dl::Rational(2 * N + 1, 2).str(),
               dl::evaluate(coded, g, 2, false).stretch_metric.str());
        bool identities = true;
        const int chain_len = static_cast<int>(x.interleave.size());
        for (int i = 1; i + 1 <= chain_len; ++i) {
            dl::Gf2Vec prefix = 0, suffix_xor = 0;
            for (int j = 1; j <= i; ++j)
                prefix ^= coded.column(x.interleave[static_cast<std::size_t>(j - 1)]);
            for (int j = i + 1; j <= chain_len; ++j)
                suffix_xor ^= coded.column(x.interleave[static_cast<std::size_t>(j - 1)]);
            const dl::Gf2Vec want = dl::gf2_unit(x.b_seq[static_cast<std::size_t>(i - 1)]);
            identities = identities && prefix == want && suffix_xor == want;
        }
        add_eq(rows, "example2 chain recovery identities" + suffix, "ok",
               identities ? "ok" : "violated");
    }

    // Two-hub tree: the coded store keeps every file in two fragments.
    {
        const dl::RootedTree tree = dl::make_example1j();
        const auto coded =
            std::get<dl::CodedStore>(dl::build_example_store("example1j_coded", 1));
        const dl::MetricReport rep = dl::evaluate(coded, tree.to_file_graph(), 8, true);
        add_eq(rows, "example1j coded jump", "2",
               rep.jump_metric.has_value() ? std::to_string(*rep.jump_metric) : "unbounded");
    }

    // Odd cycle: exact bandwidth, zig-zag layout, and its stretch.
    {
        const dl::SparseHamiltonianGraph cyc = dl::make_cycle_odd(5);
        add_eq(rows, "cycle_odd(5) oracle bandwidth", "2",
               std::to_string(dl::exact_bandwidth(cyc.to_file_graph()).bandwidth));
        const dl::ShamLayout layout = dl::layout_sham(cyc);
        add_eq(rows, "cycle_odd(5) layout displacement", "2",
               std::to_string(layout.displacement));
        add_eq(rows, "cycle_odd(5) layout stretch (t=2)", dl::Rational(3, 2).str(),
               dl::evaluate(layout.store, cyc.to_file_graph(), 2, false).stretch_metric.str());
    }

    // Nested arcs: the two-segment fold is valid and linearizes tightly.
    {
        const dl::SparseHamiltonianGraph nested = dl::make_rainbow(3, 8);
        const dl::Folding f = dl::fold_nested(3, 8);
        const bool ok = f.unit_steps() && f.aligns(nested) && f.thickness() == 2;
        add_eq(rows, "nested arcs fold (k=3, n=8)", "ok", ok ? "ok" : "violated");
        const dl::UncodedStore s = dl::linearize_from_folding(f, nested);
        add_le(rows, "nested arcs linearization displacement", 2,
               dl::max_edge_displacement(s, nested.to_file_graph()));
    }

    // Long arcs: layout stays within the k-arc displacement guarantee.
    {
        const dl::SparseHamiltonianGraph la = dl::make_long_arc(2, 8);
        const dl::ShamLayout layout = dl::layout_sham(la);
        add_le(rows, "long_arc(2, 8) layout displacement", dl::sham_displacement_bound(2),
               layout.displacement);
    }

    // Three-arc worked figure: byte-exact fold plan, bounded layout.
    {
        const dl::SparseHamiltonianGraph fig(16, {{2, 10}, {4, 12}, {8, 16}});
        const dl::FoldPlan plan = dl::compute_fold_plan(fig, dl::group_arc_feet(fig));
        add_eq(rows, "three-arc figure anchors r", "2-8-10-14-16", join_dash(plan.r));
        add_eq(rows, "three-arc figure breakpoints d", "5-9-12-15", join_dash(plan.d));
        const dl::ShamLayout layout = dl::layout_sham(fig);
        add_le(rows, "three-arc figure layout displacement", dl::sham_displacement_bound(3),
               layout.displacement);
    }

    // Reduction worked figure: byte-exact canonical store.
    {
        dl::HKCode code;
        code.H = dl::gf2_unit(2) ^ dl::gf2_unit(5) ^ dl::gf2_unit(6);
        code.K = {dl::gf2_unit(1),
                  dl::gf2_unit(2),
                  dl::gf2_unit(1) ^ dl::gf2_unit(6),
                  dl::gf2_unit(3) ^ dl::gf2_unit(4),
                  dl::gf2_unit(4) ^ dl::gf2_unit(5) ^ dl::gf2_unit(6)};
        const dl::HKCode canon = dl::reduce_hk_canonical(code);
        add_eq(rows, "reduction figure canonical store", "x1 x2 x4 x5 x2^x3 x3",
               store_signature(dl::hk_to_generator(canon)));
    }

    return rows;
}

int run_paper_examples(const std::string& out_path) {
    const std::vector<FixtureRow> rows = run_fixtures();
    bool all_pass = true;
    std::size_t width = 0;
    for (const FixtureRow& r : rows) width = std::max(width, r.name.size());
    for (const FixtureRow& r : rows) {
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
                  << std::string(width - r.name.size() + 2, ' ') << "expected " << r.expected
                  << ", got " << r.actual << "\n";
    }
    std::cout << (all_pass ? "all fixtures pass" : "FIXTURE FAILURES PRESENT") << " ("
              << rows.size() << " checks)\n";
    if (!out_path.empty()) {
        json doc;
        doc["format"] = "dedup-layout/examples-report-v1";
        json results = json::array();
        for (const FixtureRow& r : rows) {
            json row;
            row["name"] = r.name;
            row["expected"] = r.expected;
            row["actual"] = r.actual;
            row["pass"] = r.pass;
            results.push_back(std::move(row));
        }
        doc["results"] = std::move(results);
        doc["all_pass"] = all_pass;
        dl::write_text_file(out_path, dump(doc));
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deduplicated chunk-store layout toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a fixture graph or store as JSON");
    std::string gen_family, gen_store, gen_out;
    std::optional<int> gen_big_n, gen_k, gen_n;
    gen->add_option("--family", gen_family,
                    "graph family: cycle_odd, rainbow, long_arc, example1, example2, "
                    "example1j, tree2, tree16, caterpillar12, path");
    gen->add_option("--store", gen_store,
                    "fixture store: example1_coded, example1_uncoded_2dup, example1_mn, "
                    "example2_coded, example1j_coded");
    gen->add_option("--N", gen_big_n, "size parameter for example families");
    gen->add_option("--k", gen_k, "arc count for rainbow/long_arc");
    gen->add_option("--n", gen_n, "vertex count for cycle_odd/rainbow/long_arc/path");
    gen->add_option("--out", gen_out, "output file (stdout when omitted)");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a store against a graph's files");
    std::string eval_store, eval_graph, eval_out, eval_csv;
    int eval_t = 2;
    bool eval_no_jump = false;
    eval->add_option("--store", eval_store, "store JSON file")->required();
    eval->add_option("--graph", eval_graph, "graph JSON file")->required();
    eval->add_option("--t", eval_t, "max file length in chunks (default 2)");
    eval->add_option("--out", eval_out, "report file (stdout when omitted)");
    eval->add_option("--csv", eval_csv, "also write a per-path CSV table");
    eval->add_flag("--no-jump", eval_no_jump, "skip jump evaluation");

    // layout-stretch
    auto* lstretch =
        app.add_subcommand("layout-stretch", "low-displacement layout for a line-plus-arcs graph");
    std::string ls_in, ls_out, ls_plan, ls_folding;
    lstretch->add_option("--sham", ls_in, "sham JSON file (line plus disjoint arcs)")->required();
    lstretch->add_option("--out", ls_out, "store JSON output (stdout when omitted)");
    lstretch->add_option("--emit-plan", ls_plan, "also write the grouped fold plan JSON");
    lstretch->add_option("--emit-folding", ls_folding, "also write the folding JSON");

    // layout-jump
    auto* ljump = app.add_subcommand("layout-jump", "low-fragmentation layout for a rooted tree");
    std::string lj_in, lj_out, lj_algo = "min-uf";
    std::optional<int> lj_root;
    ljump->add_option("--tree", lj_in, "tree JSON file")->required();
    ljump->add_option("--root", lj_root, "re-root the tree at this vertex first");
    ljump->add_option("--layout", lj_algo, "min-uf (default), caterpillar, or two-hair");
    ljump->add_option("--out", lj_out, "store JSON output (stdout when omitted)");

    // zerofrag
    auto* zf = app.add_subcommand("zerofrag", "store with stretch 1: every file contiguous");
    std::string zf_graph, zf_out;
    int zf_t = 2;
    zf->add_option("--graph", zf_graph, "graph JSON file")->required();
    zf->add_option("--t", zf_t, "max file length in chunks (default 2)");
    zf->add_option("--out", zf_out, "store JSON output (stdout when omitted)");

    // reduce-code
    auto* rc = app.add_subcommand("reduce-code",
                                  "canonicalize a one-redundant code; audit recovery windows");
    std::string rc_in, rc_out;
    rc->add_option("--in", rc_in, "code JSON file ([H;K] rows)")->required();
    rc->add_option("--out", rc_out, "canonical code JSON output (stdout when omitted)");

    // oracle
    auto* orc = app.add_subcommand("oracle", "exact brute-force reference values");
    std::string orc_graph, orc_what, orc_out;
    int orc_t = 2, orc_jobs = 1;
    std::optional<int> orc_m;
    orc->add_option("--graph", orc_graph, "graph/sham/tree JSON file")->required();
    orc->add_option("--what", orc_what, "bandwidth, stretch, jump, zerofrag, or uf")->required();
    orc->add_option("--t", orc_t, "max file length in chunks (default 2)");
    orc->add_option("--m", orc_m, "store length (default n)");
    orc->add_option("--jobs", orc_jobs, "parallel workers for stretch/jump search");
    orc->add_option("--out", orc_out, "also write a JSON report with the witness");

    // paper-examples
    auto* pex = app.add_subcommand("paper-examples",
                                   "run the bundled worked-example fixtures; report pass/fail");
    std::string pex_out;
    pex->add_option("--out", pex_out, "JSON report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc_code = app.exit(e);
        return rc_code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return run_gen(gen_family, gen_store, gen_big_n, gen_k, gen_n, gen_out);
        if (eval->parsed())
            return run_eval(eval_store, eval_graph, eval_t, eval_out, eval_csv, !eval_no_jump);
        if (lstretch->parsed()) return run_layout_stretch(ls_in, ls_out, ls_plan, ls_folding);
        if (ljump->parsed()) return run_layout_jump(lj_in, lj_root, lj_algo, lj_out);
        if (zf->parsed()) return run_zerofrag(zf_graph, zf_t, zf_out);
        if (rc->parsed()) return run_reduce_code(rc_in, rc_out);
        if (orc->parsed()) return run_oracle(orc_graph, orc_what, orc_t, orc_m, orc_jobs, orc_out);
        if (pex->parsed()) return run_paper_examples(pex_out);
    } catch (const dl::OracleGuardError& e) {
        std::cerr << "error: " << e.what()
                  << " (set DEDUP_LAYOUT_GUARD_OVERRIDE=1 to lift oracle size guards)\n";
        return 2;
    } catch (const dl::PlanInfeasible& e) {
        std::cerr << "infeasible fold plan: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
