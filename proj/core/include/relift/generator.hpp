#pragma once

#include "relift/ast.hpp"
#include "relift/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace relift {

enum class Family { Karel, Math, Ne, MathNe };
enum class LengthClass { S, L };

const char* family_name(Family f);
Family family_from_name(const std::string& name);
const char* length_class_name(LengthClass c);
LengthClass length_class_from_name(const std::string& name);

// Target statement count per length class (S: 15, L: 30).
int statement_target(LengthClass c);

struct GenConfig {
    Family family = Family::Ne;
    LengthClass length_class = LengthClass::S;
    int var_min = 3;
    int var_max = 8;
    std::uint64_t seed = 1;
    std::size_t count = 1;
    double loop_weight = 0.5;
    double branch_weight = 0.5;
    int io_vectors = 8;

    // Throws DataError when a field is out of range.
    void validate() const;
};

// Per-family defaults: variable ranges follow the benchmark statistics
// (karel uses no variables; S draws 3..8, L draws 9..15 or 10..15).
GenConfig default_config(Family f, LengthClass c, std::uint64_t seed, std::size_t count);

struct IoPair {
    std::vector<std::int64_t> inputs;
    std::vector<std::int64_t> outputs;
    std::vector<std::string> trace;
};

struct Sample {
    std::string id;
    Node tree;
    std::vector<std::string> asm_tokens;
    std::vector<IoPair> io_pairs;
    std::uint64_t seed = 0;
};

// Control-flow skeleton: a sequence of blocks drawn from a fixed shape
// library (straight, branch, loop, loop>branch, branch>loop, loop>loop),
// nesting depth at most 2.
struct SkelNode {
    enum Kind { Stmts, Loop, Branch };
    Kind kind = Stmts;
    int count = 0;                  // Stmts: number of simple statements
    std::vector<SkelNode> body;     // Loop/Branch: nested blocks
};
using Skeleton = std::vector<SkelNode>;

// Draws a skeleton consuming roughly statement_budget statements.
// Karel skeletons always contain at least one loop or branch.
Skeleton gen_cfg(const GenConfig& cfg, Rng& rng, int statement_budget);

// Fills a fresh skeleton with family-appropriate statements.
// Deterministic in (cfg, seed); does not validate runtime behavior.
Node gen_program(const GenConfig& cfg, std::uint64_t seed);

// Draws the input vectors a sample will be executed on.
std::vector<std::vector<std::int64_t>> gen_inputs(const GenConfig& cfg, std::uint64_t sample_seed,
                                                  int nvars);

// Full pipeline: generate, compile, execute on io_vectors random inputs,
// reject non-terminating or duplicate draws, renumber ids. Deterministic
// in cfg.seed; throws DataError if a slot cannot be filled.
std::vector<Sample> gen_dataset(const GenConfig& cfg);

}  // namespace relift
