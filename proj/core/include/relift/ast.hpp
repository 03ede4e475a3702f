#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "relift/common.hpp"

namespace relift {

enum class TokenKind : std::uint8_t {
    FuncDef,
    Param,
    Assign,
    While,
    If,
    Continue,
    Return,
    BinOp,
    Call,
    Var,
    IntLit,
    TypeInt,
    TypeDouble,
    CallbackName,
    None,
};

const char* kind_name(TokenKind k);

// Kinds that can never carry children. A `none`-kind token is reserved for the
// decoder's absent-child signal and never appears inside a finished program.
inline bool is_terminal_kind(TokenKind k) {
    switch (k) {
        case TokenKind::Var:
        case TokenKind::IntLit:
        case TokenKind::CallbackName:
        case TokenKind::None:
        case TokenKind::TypeInt:
        case TokenKind::TypeDouble:
        case TokenKind::Continue:
            return true;
        default:
            return false;
    }
}

struct Token {
    TokenKind kind = TokenKind::None;
    std::string lexeme;

    bool operator==(const Token& o) const = default;
};

inline Token tok(TokenKind k, std::string lex) { return Token{k, std::move(lex)}; }

// N-ary program tree. Value semantics throughout; trees are small.
struct Node {
    Token tok;
    std::vector<Node> children;

    bool operator==(const Node& o) const = default;
};

inline Node node(Token t, std::vector<Node> ch = {}) { return Node{std::move(t), std::move(ch)}; }

// Left-child-right-sibling binary form of the same tree.
struct BinNode;
using BinNodePtr = std::unique_ptr<BinNode>;

struct BinNode {
    Token value;
    BinNodePtr left;   // first child
    BinNodePtr right;  // next sibling
};

BinNodePtr make_bin(Token value);

// Structure-preserving bijection between the two forms.
// from_lcrs rejects malformed shapes: a terminal-kind value with a left child,
// or a root carrying a right sibling.
BinNodePtr to_lcrs(const Node& root);
Node from_lcrs(const BinNode& root);

bool bin_equal(const BinNode& a, const BinNode& b);
BinNodePtr bin_clone(const BinNode& n);

// Preorder token sequence; identical for a tree and its LCRS form.
std::vector<Token> preorder_tokens(const Node& root);
std::vector<Token> preorder_tokens(const BinNode& root);
std::vector<std::string> preorder_lexemes(const Node& root);

size_t node_count(const Node& root);
size_t node_count(const BinNode& root);

// Stable structural fingerprint (token kinds, lexemes, and shape).
std::uint64_t tree_hash(const Node& root);

// Depth audit. A statement's expression structure is bounded: assignments,
// returns, and expression statements are measured over their whole subtree;
// loop and branch statements are measured over their condition plus the header
// edge, with body statements audited as statements of their own.
// Depth is counted in edges, so a lone leaf statement has depth 0.
int expr_depth(const Node& n);
int max_statement_depth(const Node& program);

// True when no `none`-kind token occurs anywhere in the tree.
bool none_free(const Node& root);

// LCRS path: "" is the root, then one 'L' (first child) or 'R' (next sibling)
// per step. Paths address nodes in the n-ary tree through its LCRS view.
struct NodeRef {
    Node* node = nullptr;
    Node* parent = nullptr;  // null for the root
    size_t index = 0;        // child slot in parent
};

// Returns a null .node when the path does not resolve (stale paths are legal input).
NodeRef resolve_lcrs_path(Node& root, const std::string& path);

// Path of the n-ary (parent,index) slot in LCRS coordinates, given the path of the parent.
std::string lcrs_child_path(const std::string& parent_path, size_t child_index);

// Resolves a path to an insertion slot (parent, index). Unlike
// resolve_lcrs_path, the slot may sit one past the parent's last child,
// which is how a trailing insertion position is addressed.
struct AnchorRef {
    Node* parent = nullptr;
    size_t index = 0;
    bool valid = false;
};
AnchorRef resolve_insertion_anchor(Node& root, const std::string& path);

}  // namespace relift
