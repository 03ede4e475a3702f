#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "relift/ast.hpp"

namespace relift {

// The language is closed: every token a program can contain is enumerable up
// front. The vocabulary is that enumeration, with a stable id order and a
// fingerprint hash that model checkpoints embed and verify on load.
class HlVocab {
public:
    static const HlVocab& instance();

    int id_of(const Token& t) const;              // throws DataError on unknown token
    const Token& token_of(int id) const;          // throws DataError on bad id
    bool contains(const Token& t) const;
    int size() const { return static_cast<int>(tokens_.size()); }
    std::uint64_t hash() const { return hash_; }

    int none_id() const { return none_id_; }

    // Lexeme alone determines the token: all lexeme sets are disjoint.
    std::optional<Token> classify(const std::string& lexeme) const;

    static const std::vector<std::string>& var_names();      // v1..v16
    static const std::vector<std::string>& digit_names();    // 0..9
    static const std::vector<std::string>& op_names();       // 16 binary operators
    static const std::vector<std::string>& math_names();     // 20 math library calls
    static const std::vector<std::string>& karel_actions();  // zero-arg callbacks
    static const std::vector<std::string>& karel_flags();    // global condition flags

    // Arity of a call target: 1 or 2 for math names, 0 for karel actions, -1 unknown.
    static int call_arity(const std::string& name);
    static bool is_math_name(const std::string& name);
    static bool is_karel_action(const std::string& name);
    static bool is_karel_flag(const std::string& name);
    // Any name the runtime resolves through a call: math or karel.
    static bool is_known_call_target(const std::string& name);

private:
    HlVocab();

    std::vector<Token> tokens_;
    std::unordered_map<std::string, int> by_lexeme_;
    std::uint64_t hash_ = 0;
    int none_id_ = -1;
};

}  // namespace relift
