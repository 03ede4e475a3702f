#pragma once

#include <string>
#include <vector>

#include "relift/ast.hpp"
#include "relift/isa.hpp"

namespace relift {

// Token-level Levenshtein distance: unit-cost insert, delete, substitute.
int edit_loss(const std::vector<std::string>& a, const std::vector<std::string>& b);

struct MatchResult {
    bool matched = false;
    int distance = 0;
};

// Compiles the candidate tree and measures its token distance to the target
// assembly; matched means distance zero. Compile failures propagate.
MatchResult verify_match(const Node& candidate, const std::vector<std::string>& target_tokens);

}  // namespace relift
