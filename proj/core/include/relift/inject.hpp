#pragma once

#include "relift/ast.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace relift {

// The three ways a sketch statement can be wrong: a token predicted as some
// other token, a redundant (duplicated) statement, and a missing (deleted)
// statement.
enum class EType { Pred, Rdt, Ms };

const char* etype_name(EType t);
EType etype_from_name(const std::string& name);

struct ErrorLabel {
    // LCRS path: for pred/rdt the labeled node in the corrupted tree; for ms
    // the insertion slot where the deleted statement belongs.
    std::string node_path;
    EType etype = EType::Pred;
    // pred: the token that was replaced; rdt: the duplicate's root token;
    // ms: the deleted statement's root token.
    Token original;
    bool masked = false;
    // ms only: the full deleted subtree, so corruption is invertible.
    Node removed;
    // Where the drawn location sat in the clean tree (pred: the node,
    // rdt: the duplicated statement, ms: the deleted statement).
    std::string orig_path;
};

struct InjectResult {
    Node corrupted;
    std::vector<ErrorLabel> labels;
};

// Corrupts ceil(rate * node_count) locations drawn uniformly without
// replacement: 80% token substitutions within the same structural class
// (pred), 10% statement duplications (rdt), 10% statement deletions (ms).
// Substitutions preserve terminal/non-terminal status and call arity, so the
// corrupted tree remains a traversable program tree (it need not compile).
// Deterministic in seed; labels are sorted by position and valid in the
// corrupted tree.
InjectResult inject_errors(const Node& tree, double rate, std::uint64_t seed);

// Exact inverse of inject_errors given its labels: restores the original tree.
Node undo_errors(const Node& corrupted, const std::vector<ErrorLabel>& labels);

// Picks floor(mask_frac * n) of the n untouched nodes to exclude from the
// supervision loss, so 'correct' does not swamp the error classes. Labeled
// error nodes are never picked. Returns sorted LCRS paths.
std::vector<std::string> loss_mask(const Node& corrupted, const std::vector<ErrorLabel>& labels,
                                   double mask_frac, std::uint64_t seed);

}  // namespace relift
