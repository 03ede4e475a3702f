#pragma once

#include "relift/generator.hpp"
#include "relift/inject.hpp"

#include <string>
#include <vector>

namespace relift {

// Line-delimited sample records. Field order is fixed:
//   {id, source_text, preorder_tokens, asm_tokens, io_pairs, seed}
// io_pairs entries are {inputs, outputs, trace}. Writing is byte-deterministic;
// reading re-parses source_text and cross-checks preorder_tokens.
std::string sample_to_line(const Sample& s);
Sample sample_from_line(const std::string& line);
void write_dataset(const std::string& path, const std::vector<Sample>& samples);
std::vector<Sample> read_dataset(const std::string& path);

// Supervision records for error-predictor training. The corrupted tree is
// transported structurally (preorder lexeme + child count pairs) because a
// corrupted tree need not re-parse from source text. Field order:
//   {id, tree, labels, masked, seed, rate}
struct LabelRecord {
    std::string id;
    Node corrupted;
    std::vector<ErrorLabel> labels;
    std::vector<std::string> masked;
    std::uint64_t seed = 0;
    double rate = 0.0;
};

std::string label_to_line(const LabelRecord& r);
LabelRecord label_from_line(const std::string& line);
void write_labels(const std::string& path, const std::vector<LabelRecord>& records);
std::vector<LabelRecord> read_labels(const std::string& path);

}  // namespace relift
