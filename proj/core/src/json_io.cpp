#include "dedup_layout/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dedup_layout {

namespace {

using json = nlohmann::ordered_json;

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

void require_format(const json& j, const std::string& tag) {
    if (!j.is_object() || !j.contains("format") || !j["format"].is_string() ||
        j["format"].get<std::string>() != tag)
        throw std::invalid_argument("expected \"format\": \"" + tag + "\"");
}

int int_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
        throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

std::string string_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_string())
        throw std::invalid_argument(std::string("missing string field \"") + key + "\"");
    return j[key].get<std::string>();
}

std::vector<int> int_list(const json& v, const char* what) {
    if (!v.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number_integer())
            throw std::invalid_argument(std::string(what) + " must contain only integers");
        out.push_back(e.get<int>());
    }
    return out;
}

std::vector<std::pair<int, int>> pair_list_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_array())
        throw std::invalid_argument(std::string("missing array field \"") + key + "\"");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j[key]) {
        const std::vector<int> uv = int_list(e, key);
        if (uv.size() != 2)
            throw std::invalid_argument(std::string("\"") + key + "\" entries must be [u, v]");
        out.emplace_back(uv[0], uv[1]);
    }
    return out;
}

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
    json arr = json::array();
    for (const auto& [u, v] : pairs) arr.push_back(json::array({u, v}));
    return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string bits_to_string(Gf2Vec v, int len) {
    std::string s(static_cast<std::size_t>(len), '0');
    for (int i = 1; i <= len; ++i)
        if ((v >> (i - 1)) & 1u) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
}

Gf2Vec bits_from_string(const std::string& s, std::size_t expected_len, const char* what) {
    if (s.size() != expected_len)
        throw std::invalid_argument(std::string(what) + " bitstrings must all have length " +
                                    std::to_string(expected_len));
    if (expected_len > 64)
        throw std::invalid_argument(std::string(what) + " supports at most 64 positions");
    Gf2Vec v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v |= Gf2Vec{1} << i;
        else if (s[i] != '0')
            throw std::invalid_argument(std::string(what) + " bitstrings must be over {0,1}");
    }
    return v;
}

std::vector<std::string> string_list_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_array())
        throw std::invalid_argument(std::string("missing array field \"") + key + "\"");
    std::vector<std::string> out;
    for (const auto& e : j[key]) {
        if (!e.is_string())
            throw std::invalid_argument(std::string("\"") + key + "\" must contain strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

json rational_json(const Rational& r) { return json(r.str()); }

json optional_int_json(const std::optional<int>& v) {
    return v.has_value() ? json(*v) : json(nullptr);
}

}  // namespace

FileGraph graph_input_to_file_graph(const GraphInput& g) {
    if (const auto* fg = std::get_if<FileGraph>(&g)) return *fg;
    if (const auto* sh = std::get_if<SparseHamiltonianGraph>(&g)) return sh->to_file_graph();
    return std::get<RootedTree>(g).to_file_graph();
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
    if (!out) throw std::invalid_argument("write failed: " + path);
}

std::string graph_to_json(const FileGraph& g) {
    json j;
    j["format"] = "dedup-layout/graph-v1";
    j["n"] = g.n();
    j["edges"] = pairs_to_json(g.edges());
    return dump(j);
}

std::string sham_to_json(const SparseHamiltonianGraph& g) {
    json j;
    j["format"] = "dedup-layout/sham-v1";
    j["n"] = g.n();
    j["arcs"] = pairs_to_json(g.arcs());
    return dump(j);
}

std::string tree_to_json(const RootedTree& t) {
    json j;
    j["format"] = "dedup-layout/tree-v1";
    j["n"] = t.n();
    j["root"] = t.root();
    json parent = json::object();
    for (int v = 1; v <= t.n(); ++v)
        if (v != t.root()) parent[std::to_string(v)] = t.parent(v);
    j["parent"] = std::move(parent);
    return dump(j);
}

std::string store_to_json(const UncodedStore& s) {
    json j;
    j["format"] = "dedup-layout/store-v1";
    j["kind"] = "uncoded";
    j["sequence"] = s.sequence;
    return dump(j);
}

std::string store_to_json(const CodedStore& c) {
    json j;
    j["format"] = "dedup-layout/store-v1";
    j["kind"] = "coded";
    j["n"] = c.n;
    json cols = json::array();
    for (const Gf2Vec col : c.columns) cols.push_back(bits_to_string(col, c.n));
    j["columns"] = std::move(cols);
    return dump(j);
}

std::string store_to_json(const StoreVariant& s) {
    if (const auto* u = std::get_if<UncodedStore>(&s)) return store_to_json(*u);
    return store_to_json(std::get<CodedStore>(s));
}

std::string folding_to_json(const Folding& f) {
    json j;
    j["format"] = "dedup-layout/folding-v1";
    j["h"] = std::vector<int>(f.h.begin() + 1, f.h.end());
    return dump(j);
}

std::string fold_plan_to_json(const FoldPlan& p) {
    json j;
    j["format"] = "dedup-layout/foldplan-v1";
    j["groups"] = p.groups;
    j["r"] = p.r;
    j["d"] = p.d;
    return dump(j);
}

std::string hk_code_to_json(const HKCode& code) {
    json j;
    j["format"] = "dedup-layout/hkcode-v1";
    j["H"] = json::array({bits_to_string(code.H, code.m())});
    json rows = json::array();
    for (const Gf2Vec row : code.K) rows.push_back(bits_to_string(row, code.m()));
    j["K"] = std::move(rows);
    return dump(j);
}

FileGraph graph_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    require_format(j, "dedup-layout/graph-v1");
    return FileGraph(int_field(j, "n"), pair_list_field(j, "edges"));
}

SparseHamiltonianGraph sham_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    require_format(j, "dedup-layout/sham-v1");
    return SparseHamiltonianGraph(int_field(j, "n"), pair_list_field(j, "arcs"));
}

RootedTree tree_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    require_format(j, "dedup-layout/tree-v1");
    const int n = int_field(j, "n");
    const int root = int_field(j, "root");
    if (n < 1 || root < 1 || root > n)
        throw std::invalid_argument("tree root must be a vertex in [1, n]");
    if (!j.contains("parent") || !j["parent"].is_object())
        throw std::invalid_argument("missing object field \"parent\"");
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [key, value] : j["parent"].items()) {
        std::size_t used = 0;
        int child = 0;
        try {
            child = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || child < 1 || child > n)
            throw std::invalid_argument("\"parent\" keys must be vertices in [1, n]");
        if (!value.is_number_integer())
            throw std::invalid_argument("\"parent\" values must be integers");
        const int p = value.get<int>();
        if (child == root) {
            if (p != 0) throw std::invalid_argument("the root must not have a parent");
            continue;
        }
        parent[static_cast<std::size_t>(child)] = p;
    }
    return RootedTree(n, root, std::move(parent));
}

GraphInput graph_input_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    const std::string tag =
        j.is_object() && j.contains("format") && j["format"].is_string()
            ? j["format"].get<std::string>()
            : "";
    if (tag == "dedup-layout/graph-v1") return graph_from_json(text);
    if (tag == "dedup-layout/sham-v1") return sham_from_json(text);
    if (tag == "dedup-layout/tree-v1") return tree_from_json(text);
    throw std::invalid_argument(
        "expected a dedup-layout/graph-v1, sham-v1, or tree-v1 document");
}

StoreVariant store_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    require_format(j, "dedup-layout/store-v1");
    const std::string kind = string_field(j, "kind");
    if (kind == "uncoded") {
        if (!j.contains("sequence"))
            throw std::invalid_argument("missing array field \"sequence\"");
        return UncodedStore{int_list(j["sequence"], "\"sequence\"")};
    }
    if (kind == "coded") {
        const int n = int_field(j, "n");
        if (n < 1 || n > 64) throw std::invalid_argument("coded stores support 1 <= n <= 64");
        std::vector<Gf2Vec> columns;
        for (const std::string& s : string_list_field(j, "columns"))
            columns.push_back(bits_from_string(s, static_cast<std::size_t>(n), "\"columns\""));
        return CodedStore(n, std::move(columns));
    }
    throw std::invalid_argument("\"kind\" must be \"uncoded\" or \"coded\"");
}

Folding folding_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    require_format(j, "dedup-layout/folding-v1");
    if (!j.contains("h")) throw std::invalid_argument("missing array field \"h\"");
    std::vector<int> h = int_list(j["h"], "\"h\"");
    if (h.empty()) throw std::invalid_argument("\"h\" must be nonempty");
    h.insert(h.begin(), 0);  // 1-based storage
    return Folding(std::move(h));
}

HKCode hk_code_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    require_format(j, "dedup-layout/hkcode-v1");
    const std::vector<std::string> h_rows = string_list_field(j, "H");
    const std::vector<std::string> k_rows = string_list_field(j, "K");
    if (h_rows.size() != 1)
        throw std::invalid_argument("\"H\" must contain exactly one parity row");
    if (k_rows.empty()) throw std::invalid_argument("\"K\" must be nonempty");
    const std::size_t m = k_rows.size() + 1;
    HKCode code;
    code.H = bits_from_string(h_rows[0], m, "\"H\"");
    for (const std::string& s : k_rows) code.K.push_back(bits_from_string(s, m, "\"K\""));
    return code;
}

std::string report_to_json(const MetricReport& r,
                           const std::vector<std::pair<std::string, std::string>>& input_hashes) {
    json j;
    j["format"] = "dedup-layout/report-v1";
    json inputs = json::object();
    for (const auto& [label, hash] : input_hashes) inputs[label] = hash;
    j["inputs"] = std::move(inputs);
    j["t"] = r.t;
    j["stretch_metric"] = rational_json(r.stretch_metric);
    j["jump_metric"] = optional_int_json(r.jump_metric);
    if (r.per_path.empty()) {
        j["worst_stretch_path"] = json(nullptr);
        j["worst_jump_path"] = json(nullptr);
    } else {
        j["worst_stretch_path"] = r.per_path[r.worst_stretch_index].path.vertices;
        j["worst_jump_path"] =
            r.worst_jump_index.has_value()
                ? json(r.per_path[*r.worst_jump_index].path.vertices)
                : json(nullptr);
    }
    json rows = json::array();
    for (const PathMetrics& pm : r.per_path) {
        json row;
        row["path"] = pm.path.vertices;
        row["stretch"] = rational_json(pm.stretch);
        row["jump"] = optional_int_json(pm.jump);
        row["stretch_witness"] = pm.stretch_witness.positions;
        row["jump_witness"] = pm.jump_witness.positions;
        rows.push_back(std::move(row));
    }
    j["per_path"] = std::move(rows);
    return dump(j);
}

}  // namespace dedup_layout
