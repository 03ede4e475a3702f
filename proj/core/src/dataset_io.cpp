#include "relift/dataset_io.hpp"

#include "relift/lang_text.hpp"
#include "relift/vocab.hpp"

#include <fstream>

#include "json.hpp"

namespace relift {

namespace {

using ordered_json = nlohmann::ordered_json;

void flatten(const Node& n, ordered_json& out) {
    out.push_back(ordered_json::array({n.tok.lexeme, n.children.size()}));
    for (const Node& c : n.children) flatten(c, out);
}

ordered_json tree_to_flat(const Node& n) {
    ordered_json out = ordered_json::array();
    flatten(n, out);
    return out;
}

Node unflatten(const ordered_json& flat, size_t& cursor) {
    if (cursor >= flat.size()) throw DataError("flat tree: truncated");
    const auto& entry = flat[cursor++];
    std::string lexeme = entry.at(0).get<std::string>();
    size_t n_children = entry.at(1).get<size_t>();
    auto t = HlVocab::instance().classify(lexeme);
    if (!t) throw DataError("flat tree: unknown lexeme '" + lexeme + "'");
    Node n = node(*t);
    n.children.reserve(n_children);
    for (size_t i = 0; i < n_children; ++i) n.children.push_back(unflatten(flat, cursor));
    return n;
}

Node tree_from_flat(const ordered_json& flat) {
    size_t cursor = 0;
    Node n = unflatten(flat, cursor);
    if (cursor != flat.size()) throw DataError("flat tree: trailing entries");
    return n;
}

template <typename WriteLine, typename Seq>
void write_lines(const std::string& path, const Seq& items, WriteLine&& line_of) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);
    for (const auto& item : items) out << line_of(item) << '\n';
    if (!out) throw DataError("write failed: " + path);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open for reading: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

}  // namespace

std::string sample_to_line(const Sample& s) {
    ordered_json j;
    j["id"] = s.id;
    j["source_text"] = pretty_print(s.tree);
    j["preorder_tokens"] = preorder_lexemes(s.tree);
    j["asm_tokens"] = s.asm_tokens;
    ordered_json pairs = ordered_json::array();
    for (const IoPair& p : s.io_pairs) {
        ordered_json jp;
        jp["inputs"] = p.inputs;
        jp["outputs"] = p.outputs;
        jp["trace"] = p.trace;
        pairs.push_back(std::move(jp));
    }
    j["io_pairs"] = std::move(pairs);
    j["seed"] = s.seed;
    return j.dump();
}

Sample sample_from_line(const std::string& line) {
    ordered_json j = ordered_json::parse(line);
    Sample s;
    s.id = j.at("id").get<std::string>();
    s.tree = parse_program(j.at("source_text").get<std::string>());
    auto stored = j.at("preorder_tokens").get<std::vector<std::string>>();
    if (stored != preorder_lexemes(s.tree))
        throw DataError("sample " + s.id + ": preorder_tokens disagree with source_text");
    s.asm_tokens = j.at("asm_tokens").get<std::vector<std::string>>();
    for (const auto& jp : j.at("io_pairs")) {
        IoPair p;
        p.inputs = jp.at("inputs").get<std::vector<std::int64_t>>();
        p.outputs = jp.at("outputs").get<std::vector<std::int64_t>>();
        p.trace = jp.at("trace").get<std::vector<std::string>>();
        s.io_pairs.push_back(std::move(p));
    }
    s.seed = j.at("seed").get<std::uint64_t>();
    return s;
}

void write_dataset(const std::string& path, const std::vector<Sample>& samples) {
    write_lines(path, samples, sample_to_line);
}

std::vector<Sample> read_dataset(const std::string& path) {
    std::vector<Sample> samples;
    for (const std::string& line : read_lines(path)) samples.push_back(sample_from_line(line));
    return samples;
}

std::string label_to_line(const LabelRecord& r) {
    ordered_json j;
    j["id"] = r.id;
    j["tree"] = tree_to_flat(r.corrupted);
    ordered_json labs = ordered_json::array();
    for (const ErrorLabel& lab : r.labels) {
        ordered_json jl;
        jl["path"] = lab.node_path;
        jl["etype"] = etype_name(lab.etype);
        jl["original"] = lab.original.lexeme;
        jl["orig_path"] = lab.orig_path;
        if (lab.etype == EType::Ms)
            jl["removed"] = tree_to_flat(lab.removed);
        labs.push_back(std::move(jl));
    }
    j["labels"] = std::move(labs);
    j["masked"] = r.masked;
    j["seed"] = r.seed;
    j["rate"] = r.rate;
    return j.dump();
}

LabelRecord label_from_line(const std::string& line) {
    ordered_json j = ordered_json::parse(line);
    LabelRecord r;
    r.id = j.at("id").get<std::string>();
    r.corrupted = tree_from_flat(j.at("tree"));
    for (const auto& jl : j.at("labels")) {
        ErrorLabel lab;
        lab.node_path = jl.at("path").get<std::string>();
        lab.etype = etype_from_name(jl.at("etype").get<std::string>());
        std::string lex = jl.at("original").get<std::string>();
        auto t = HlVocab::instance().classify(lex);
        if (!t) throw DataError("label: unknown original lexeme '" + lex + "'");
        lab.original = *t;
        lab.orig_path = jl.at("orig_path").get<std::string>();
        if (lab.etype == EType::Ms) lab.removed = tree_from_flat(jl.at("removed"));
        r.labels.push_back(std::move(lab));
    }
    r.masked = j.at("masked").get<std::vector<std::string>>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.rate = j.at("rate").get<double>();
    return r;
}

void write_labels(const std::string& path, const std::vector<LabelRecord>& records) {
    write_lines(path, records, label_to_line);
}

std::vector<LabelRecord> read_labels(const std::string& path) {
    std::vector<LabelRecord> records;
    for (const std::string& line : read_lines(path)) records.push_back(label_from_line(line));
    return records;
}

}  // namespace relift
