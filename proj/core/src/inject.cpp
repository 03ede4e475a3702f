#include "relift/inject.hpp"

#include "relift/rng.hpp"
#include "relift/vocab.hpp"

#include <algorithm>
#include <cmath>

namespace relift {

namespace {

using IdxPath = std::vector<size_t>;

bool is_prefix(const IdxPath& p, const IdxPath& q) {
    if (p.size() > q.size()) return false;
    return std::equal(p.begin(), p.end(), q.begin());
}

std::string to_lcrs_string(const IdxPath& p) {
    std::string s;
    for (size_t idx : p) s = lcrs_child_path(s, idx);
    return s;
}

IdxPath from_lcrs_string(const std::string& s) {
    IdxPath p;
    for (char c : s) {
        if (c == 'L')
            p.push_back(0);
        else if (c == 'R') {
            if (p.empty()) throw Error("bad LCRS path: leading R");
            p.back() += 1;
        } else {
            throw Error(std::string("bad LCRS path step '") + c + "'");
        }
    }
    return p;
}

Node* walk(Node& root, const IdxPath& p, size_t upto) {
    Node* n = &root;
    for (size_t i = 0; i < upto; ++i) {
        if (p[i] >= n->children.size()) throw Error("inject: path walk out of range");
        n = &n->children[p[i]];
    }
    return n;
}

void collect_statements(const Node& n, IdxPath& cur, std::vector<IdxPath>& out) {
    size_t first = 0;
    if (n.tok.kind == TokenKind::While || n.tok.kind == TokenKind::If) first = 1;
    for (size_t i = first; i < n.children.size(); ++i) {
        const Node& c = n.children[i];
        if (n.tok.kind == TokenKind::FuncDef && c.tok.kind == TokenKind::Param) continue;
        cur.push_back(i);
        out.push_back(cur);
        if (c.tok.kind == TokenKind::While || c.tok.kind == TokenKind::If)
            collect_statements(c, cur, out);
        cur.pop_back();
    }
}

bool pred_eligible(TokenKind k) {
    switch (k) {
        case TokenKind::While:
        case TokenKind::If:
        case TokenKind::BinOp:
        case TokenKind::Call:
        case TokenKind::Var:
        case TokenKind::IntLit:
        case TokenKind::CallbackName:
        case TokenKind::TypeInt:
        case TokenKind::TypeDouble:
            return true;
        default:
            return false;
    }
}

void collect_nodes(const Node& n, IdxPath& cur, std::vector<std::pair<IdxPath, Token>>& out) {
    out.emplace_back(cur, n.tok);
    for (size_t i = 0; i < n.children.size(); ++i) {
        cur.push_back(i);
        collect_nodes(n.children[i], cur, out);
        cur.pop_back();
    }
}

// Substitution pool: tokens structurally interchangeable with t (same
// terminal status, same call arity), excluding t itself.
std::vector<Token> substitution_pool(const Token& t, size_t n_children) {
    std::vector<Token> pool;
    auto add = [&](TokenKind k, const std::string& lex) {
        if (lex != t.lexeme) pool.push_back(Token{k, lex});
    };
    switch (t.kind) {
        case TokenKind::While:
        case TokenKind::If:
            add(TokenKind::While, "while");
            add(TokenKind::If, "if");
            break;
        case TokenKind::BinOp:
            for (const auto& o : HlVocab::op_names()) add(TokenKind::BinOp, o);
            break;
        case TokenKind::Var:
        case TokenKind::IntLit:
            for (const auto& v : HlVocab::var_names()) add(TokenKind::Var, v);
            for (const auto& d : HlVocab::digit_names()) add(TokenKind::IntLit, d);
            break;
        case TokenKind::CallbackName:
            for (const auto& f : HlVocab::karel_flags()) add(TokenKind::CallbackName, f);
            break;
        case TokenKind::TypeInt:
            add(TokenKind::TypeDouble, "double");
            break;
        case TokenKind::TypeDouble:
            add(TokenKind::TypeInt, "int");
            break;
        case TokenKind::Call:
            for (const auto& m : HlVocab::math_names())
                if (HlVocab::call_arity(m) == static_cast<int>(n_children))
                    add(TokenKind::Call, m);
            if (n_children == 0)
                for (const auto& a : HlVocab::karel_actions()) add(TokenKind::Call, a);
            break;
        default:
            break;
    }
    return pool;
}

struct Edit {
    IdxPath path;
    EType etype;
};

// Shift rp by an insertion/deletion at slot (parent_path, k). delta is +1 for
// an insertion, -1 for a deletion.
void fixup(IdxPath& rp, const IdxPath& parent_path, size_t k, int delta) {
    if (rp.size() <= parent_path.size()) return;
    if (!std::equal(parent_path.begin(), parent_path.end(), rp.begin())) return;
    size_t& slot = rp[parent_path.size()];
    if (delta > 0) {
        if (slot >= k) slot += 1;
    } else {
        if (slot > k) slot -= 1;
    }
}

struct PlacedLabel {
    IdxPath path;
    EType etype;
    Token original;
    Node removed;
    IdxPath orig;
};

struct PredTarget {
    IdxPath path;  // shifted to track structural edits
    IdxPath orig;  // clean-tree coordinates
    Token original;
};

}  // namespace

const char* etype_name(EType t) {
    switch (t) {
        case EType::Pred: return "pred";
        case EType::Rdt: return "rdt";
        case EType::Ms: return "ms";
    }
    return "?";
}

EType etype_from_name(const std::string& name) {
    if (name == "pred") return EType::Pred;
    if (name == "rdt") return EType::Rdt;
    if (name == "ms") return EType::Ms;
    throw DataError("unknown error type: " + name);
}

InjectResult inject_errors(const Node& tree, double rate, std::uint64_t seed) {
    if (rate < 0.10 - 1e-12 || rate > 0.20 + 1e-12)
        throw DataError("inject_errors: rate must sit within [0.10, 0.20]");
    IdxPath cur;
    std::vector<IdxPath> stmts;
    collect_statements(tree, cur, stmts);
    if (stmts.empty()) throw DataError("inject_errors: tree has no statements");

    const size_t n_tokens = node_count(tree);
    const size_t n_err = static_cast<size_t>(std::ceil(rate * static_cast<double>(n_tokens)));
    Rng rng(seed);

    size_t n_pred = 0, n_rdt = 0, n_ms = 0;
    for (size_t i = 0; i < n_err; ++i) {
        double r = rng.uniform();
        if (r < 0.8)
            ++n_pred;
        else if (r < 0.9)
            ++n_rdt;
        else
            ++n_ms;
    }
    // Never delete the last statement; unplaceable structural errors fall
    // back to substitutions.
    if (n_ms >= stmts.size()) {
        n_pred += n_ms - (stmts.size() - 1);
        n_ms = stmts.size() - 1;
    }

    // Structural targets: statements with pairwise disjoint subtrees.
    std::vector<Edit> structural;
    {
        std::vector<IdxPath> pool = stmts;
        rng.shuffle(pool);
        size_t want_ms = n_ms, want_rdt = n_rdt;
        for (const IdxPath& cand : pool) {
            if (want_ms == 0 && want_rdt == 0) break;
            bool conflict = false;
            for (const Edit& e : structural)
                if (is_prefix(e.path, cand) || is_prefix(cand, e.path)) {
                    conflict = true;
                    break;
                }
            if (conflict) continue;
            if (want_ms > 0) {
                structural.push_back(Edit{cand, EType::Ms});
                --want_ms;
            } else {
                structural.push_back(Edit{cand, EType::Rdt});
                --want_rdt;
            }
        }
        n_pred += want_ms + want_rdt;  // unplaced structural errors
        n_ms -= want_ms;
        n_rdt -= want_rdt;
    }

    // Substitution targets: uniform over eligible nodes outside deleted
    // subtrees, without replacement.
    std::vector<std::pair<IdxPath, Token>> nodes;
    collect_nodes(tree, cur, nodes);
    std::vector<std::pair<IdxPath, Token>> eligible;
    for (auto& [p, t] : nodes) {
        if (!pred_eligible(t.kind)) continue;
        bool inside_deleted = false;
        for (const Edit& e : structural)
            if (e.etype == EType::Ms && is_prefix(e.path, p)) {
                inside_deleted = true;
                break;
            }
        if (!inside_deleted) eligible.emplace_back(p, t);
    }
    if (n_pred > eligible.size())
        throw DataError("inject_errors: not enough substitutable nodes for the requested rate");
    rng.shuffle(eligible);
    std::vector<PredTarget> pred_targets;
    pred_targets.reserve(n_pred);
    for (size_t i = 0; i < n_pred; ++i)
        pred_targets.push_back(PredTarget{eligible[i].first, eligible[i].first, eligible[i].second});

    Node corrupted = tree;
    std::vector<PlacedLabel> placed;

    // Structural edits applied at descending paths: each application leaves
    // every remaining (smaller) path valid, and already-placed labels plus
    // pending substitution paths are shifted to follow.
    std::sort(structural.begin(), structural.end(),
              [](const Edit& a, const Edit& b) { return a.path > b.path; });
    for (const Edit& e : structural) {
        IdxPath parent_path(e.path.begin(), e.path.end() - 1);
        size_t k = e.path.back();
        Node* parent = walk(corrupted, e.path, e.path.size() - 1);
        if (e.etype == EType::Rdt) {
            Node copy = parent->children[k];
            Token root_tok = copy.tok;
            parent->children.insert(parent->children.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                                    std::move(copy));
            for (PlacedLabel& pl : placed) fixup(pl.path, parent_path, k + 1, +1);
            for (PredTarget& pt : pred_targets) fixup(pt.path, parent_path, k + 1, +1);
            IdxPath dup = e.path;
            dup.back() += 1;
            placed.push_back(PlacedLabel{dup, EType::Rdt, root_tok, Node{}, e.path});
        } else {
            Node removed = std::move(parent->children[k]);
            parent->children.erase(parent->children.begin() + static_cast<std::ptrdiff_t>(k));
            for (PlacedLabel& pl : placed) fixup(pl.path, parent_path, k, -1);
            for (PredTarget& pt : pred_targets) fixup(pt.path, parent_path, k, -1);
            placed.push_back(PlacedLabel{e.path, EType::Ms, removed.tok, std::move(removed), e.path});
        }
    }

    for (PredTarget& pt : pred_targets) {
        Node* n = walk(corrupted, pt.path, pt.path.size());
        auto pool = substitution_pool(pt.original, n->children.size());
        if (pool.empty()) throw DataError("inject_errors: empty substitution pool");
        n->tok = pool[rng.below(pool.size())];
        placed.push_back(PlacedLabel{pt.path, EType::Pred, pt.original, Node{}, pt.orig});
    }

    std::sort(placed.begin(), placed.end(),
              [](const PlacedLabel& a, const PlacedLabel& b) { return a.path < b.path; });
    InjectResult result;
    result.corrupted = std::move(corrupted);
    result.labels.reserve(placed.size());
    for (PlacedLabel& pl : placed) {
        ErrorLabel lab;
        lab.node_path = to_lcrs_string(pl.path);
        lab.etype = pl.etype;
        lab.original = pl.original;
        lab.removed = std::move(pl.removed);
        lab.orig_path = to_lcrs_string(pl.orig);
        result.labels.push_back(std::move(lab));
    }
    return result;
}

Node undo_errors(const Node& corrupted, const std::vector<ErrorLabel>& labels) {
    Node t = corrupted;
    for (const ErrorLabel& lab : labels) {
        if (lab.etype != EType::Pred) continue;
        NodeRef ref = resolve_lcrs_path(t, lab.node_path);
        if (!ref.node) throw DataError("undo_errors: stale substitution path");
        ref.node->tok = lab.original;
    }
    struct Undo {
        IdxPath path;
        IdxPath orig;
        const ErrorLabel* lab;
    };
    std::vector<Undo> structural;
    for (const ErrorLabel& lab : labels)
        if (lab.etype != EType::Pred)
            structural.push_back(
                Undo{from_lcrs_string(lab.node_path), from_lcrs_string(lab.orig_path), &lab});
    // Adjacent deletions share an insertion anchor; the clean-tree position
    // breaks the tie so the later statement is reinserted first.
    std::sort(structural.begin(), structural.end(), [](const Undo& a, const Undo& b) {
        if (a.path != b.path) return a.path > b.path;
        return a.orig > b.orig;
    });
    for (const Undo& u : structural) {
        if (u.path.empty()) throw DataError("undo_errors: structural label at root");
        Node* parent = walk(t, u.path, u.path.size() - 1);
        size_t k = u.path.back();
        if (u.lab->etype == EType::Rdt) {
            if (k >= parent->children.size()) throw DataError("undo_errors: stale duplicate path");
            parent->children.erase(parent->children.begin() + static_cast<std::ptrdiff_t>(k));
        } else {
            if (k > parent->children.size()) throw DataError("undo_errors: stale insertion anchor");
            parent->children.insert(parent->children.begin() + static_cast<std::ptrdiff_t>(k),
                                    u.lab->removed);
        }
    }
    return t;
}

std::vector<std::string> loss_mask(const Node& corrupted, const std::vector<ErrorLabel>& labels,
                                   double mask_frac, std::uint64_t seed) {
    if (mask_frac < 0.0 || mask_frac >= 1.0) throw DataError("loss_mask: mask_frac out of range");
    IdxPath cur;
    std::vector<std::pair<IdxPath, Token>> nodes;
    collect_nodes(corrupted, cur, nodes);
    std::vector<std::string> error_paths;
    for (const ErrorLabel& lab : labels)
        if (lab.etype != EType::Ms) error_paths.push_back(lab.node_path);
    std::sort(error_paths.begin(), error_paths.end());
    std::vector<std::string> status0;
    for (auto& [p, t] : nodes) {
        std::string lp = to_lcrs_string(p);
        if (!std::binary_search(error_paths.begin(), error_paths.end(), lp))
            status0.push_back(std::move(lp));
    }
    size_t n_mask = static_cast<size_t>(std::floor(mask_frac * static_cast<double>(status0.size())));
    Rng rng(seed);
    rng.shuffle(status0);
    status0.resize(n_mask);
    std::sort(status0.begin(), status0.end());
    return status0;
}

}  // namespace relift
