#include "relift/ast.hpp"

namespace relift {

const char* kind_name(TokenKind k) {
    switch (k) {
        case TokenKind::FuncDef: return "func-def";
        case TokenKind::Param: return "param";
        case TokenKind::Assign: return "stmt-assign";
        case TokenKind::While: return "stmt-while";
        case TokenKind::If: return "stmt-if";
        case TokenKind::Continue: return "stmt-continue";
        case TokenKind::Return: return "stmt-return";
        case TokenKind::BinOp: return "binary-op";
        case TokenKind::Call: return "call";
        case TokenKind::Var: return "var";
        case TokenKind::IntLit: return "int-lit";
        case TokenKind::TypeInt: return "type-int";
        case TokenKind::TypeDouble: return "type-double";
        case TokenKind::CallbackName: return "callback-name";
        case TokenKind::None: return "none";
    }
    return "?";
}

BinNodePtr make_bin(Token value) {
    auto n = std::make_unique<BinNode>();
    n->value = std::move(value);
    return n;
}

static BinNodePtr to_lcrs_rec(const Node& n) {
    auto b = make_bin(n.tok);
    BinNode* tail = nullptr;
    for (const Node& ch : n.children) {
        BinNodePtr cb = to_lcrs_rec(ch);
        if (!tail) {
            b->left = std::move(cb);
            tail = b->left.get();
        } else {
            tail->right = std::move(cb);
            tail = tail->right.get();
        }
    }
    return b;
}

BinNodePtr to_lcrs(const Node& root) { return to_lcrs_rec(root); }

static Node from_lcrs_rec(const BinNode& b) {
    if (is_terminal_kind(b.value.kind) && b.left)
        throw ShapeError(std::string("from_lcrs: terminal token '") + b.value.lexeme +
                         "' carries a left child");
    Node n{b.value, {}};
    for (const BinNode* c = b.left.get(); c; c = c->right.get())
        n.children.push_back(from_lcrs_rec(*c));
    return n;
}

Node from_lcrs(const BinNode& root) {
    if (root.right) throw ShapeError("from_lcrs: root carries a right sibling");
    return from_lcrs_rec(root);
}

bool bin_equal(const BinNode& a, const BinNode& b) {
    if (!(a.value == b.value)) return false;
    if (static_cast<bool>(a.left) != static_cast<bool>(b.left)) return false;
    if (static_cast<bool>(a.right) != static_cast<bool>(b.right)) return false;
    if (a.left && !bin_equal(*a.left, *b.left)) return false;
    if (a.right && !bin_equal(*a.right, *b.right)) return false;
    return true;
}

BinNodePtr bin_clone(const BinNode& n) {
    auto c = make_bin(n.value);
    if (n.left) c->left = bin_clone(*n.left);
    if (n.right) c->right = bin_clone(*n.right);
    return c;
}

static void preorder_rec(const Node& n, std::vector<Token>& out) {
    out.push_back(n.tok);
    for (const Node& c : n.children) preorder_rec(c, out);
}

std::vector<Token> preorder_tokens(const Node& root) {
    std::vector<Token> out;
    preorder_rec(root, out);
    return out;
}

static void preorder_bin_rec(const BinNode& n, std::vector<Token>& out) {
    out.push_back(n.value);
    if (n.left) preorder_bin_rec(*n.left, out);
    if (n.right) preorder_bin_rec(*n.right, out);
}

std::vector<Token> preorder_tokens(const BinNode& root) {
    std::vector<Token> out;
    preorder_bin_rec(root, out);
    return out;
}

std::vector<std::string> preorder_lexemes(const Node& root) {
    std::vector<std::string> out;
    for (const Token& t : preorder_tokens(root)) out.push_back(t.lexeme);
    return out;
}

size_t node_count(const Node& root) {
    size_t n = 1;
    for (const Node& c : root.children) n += node_count(c);
    return n;
}

size_t node_count(const BinNode& root) {
    size_t n = 1;
    if (root.left) n += node_count(*root.left);
    if (root.right) n += node_count(*root.right);
    return n;
}

static void hash_rec(const Node& n, std::uint64_t& h) {
    h = fnv1a(kind_name(n.tok.kind), h);
    h = fnv1a(n.tok.lexeme, h);
    h = fnv1a("(", h);
    for (const Node& c : n.children) hash_rec(c, h);
    h = fnv1a(")", h);
}

std::uint64_t tree_hash(const Node& root) {
    std::uint64_t h = 14695981039346656037ULL;
    hash_rec(root, h);
    return h;
}

int expr_depth(const Node& n) {
    int d = 0;
    for (const Node& c : n.children) d = std::max(d, 1 + expr_depth(c));
    return d;
}

static int stmt_depth_rec(const Node& stmt) {
    switch (stmt.tok.kind) {
        case TokenKind::While:
        case TokenKind::If: {
            int d = stmt.children.empty() ? 0 : 1 + expr_depth(stmt.children[0]);
            for (size_t i = 1; i < stmt.children.size(); ++i)
                d = std::max(d, stmt_depth_rec(stmt.children[i]));
            return d;
        }
        default:
            return expr_depth(stmt);
    }
}

int max_statement_depth(const Node& program) {
    int d = 0;
    if (program.tok.kind != TokenKind::FuncDef) return stmt_depth_rec(program);
    for (const Node& c : program.children) {
        if (c.tok.kind == TokenKind::Param) continue;
        d = std::max(d, stmt_depth_rec(c));
    }
    return d;
}

bool none_free(const Node& root) {
    if (root.tok.kind == TokenKind::None) return false;
    for (const Node& c : root.children)
        if (!none_free(c)) return false;
    return true;
}

NodeRef resolve_lcrs_path(Node& root, const std::string& path) {
    NodeRef ref{&root, nullptr, 0};
    for (char step : path) {
        if (!ref.node) return {};
        if (step == 'L') {
            if (ref.node->children.empty()) return {};
            ref.parent = ref.node;
            ref.index = 0;
            ref.node = &ref.node->children[0];
        } else if (step == 'R') {
            if (!ref.parent || ref.index + 1 >= ref.parent->children.size()) return {};
            ref.index += 1;
            ref.node = &ref.parent->children[ref.index];
        } else {
            throw Error(std::string("resolve_lcrs_path: bad step '") + step + "'");
        }
    }
    return ref;
}

std::string lcrs_child_path(const std::string& parent_path, size_t child_index) {
    std::string p = parent_path + "L";
    p.append(child_index, 'R');
    return p;
}

AnchorRef resolve_insertion_anchor(Node& root, const std::string& path) {
    Node* parent = nullptr;
    Node* cur = &root;
    size_t index = 0;
    for (char step : path) {
        if (step == 'L') {
            if (!cur) return {};
            parent = cur;
            index = 0;
        } else if (step == 'R') {
            if (!parent || index > parent->children.size()) return {};
            index += 1;
        } else {
            throw Error(std::string("resolve_insertion_anchor: bad step '") + step + "'");
        }
        cur = (index < parent->children.size()) ? &parent->children[index] : nullptr;
    }
    if (!parent || index > parent->children.size()) return {};
    return AnchorRef{parent, index, true};
}

}  // namespace relift
