#include "relift/generator.hpp"

#include "relift/compiler.hpp"
#include "relift/interp.hpp"
#include "relift/vocab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

namespace relift {

namespace {

// Expression-depth mix for assignment right-hand sides. Tuned so short-class
// ne programs land near the target average token length.
constexpr double kRhsTerminalP = 0.82;
constexpr double kRhsOneOpP = 0.15;

// Probability that a comparison condition grows an || / && junction.
constexpr double kJunctionP = 0.15;

// Probability that a loop is built around a guaranteed-progress driver
// instead of free-form (free-form loops survive only if execution on the
// sample's inputs terminates).
constexpr double kCountedLoopP = 0.80;
constexpr double kMathDrivenLoopP = 0.70;

constexpr double kContinueP = 0.15;
constexpr double kReturnP = 0.5;
constexpr double kDigitLeafP = 0.2;
constexpr double kMathNeCallLeafP = 0.4;

// Generation-time execution budget: half the replay default, so accepted
// samples replay with ample margin.
constexpr std::uint64_t kGenMaxSteps = 50000;

const std::vector<std::string>& value_ops() {
    static const std::vector<std::string> ops = {"+", "-", "*", "/", "<<", ">>", "&", "|", "^"};
    return ops;
}
const std::vector<std::string>& compare_ops() {
    static const std::vector<std::string> ops = {"==", "<", "<=", ">", ">="};
    return ops;
}
const std::vector<std::string>& below_ops() {
    // Shapes meaning "driver is below limit"; the first operand is the driver
    // for < and <=, the limit for > and >=.
    static const std::vector<std::string> ops = {"<", "<="};
    return ops;
}
const std::vector<std::string>& compare_calls() {
    static const std::vector<std::string> names = {"isgreater", "isgreaterequal", "isless",
                                                   "islessequal"};
    return names;
}

Node var_node(int k) { return node(tok(TokenKind::Var, "v" + std::to_string(k))); }
Node digit_node(int d) { return node(tok(TokenKind::IntLit, std::to_string(d))); }
Node op_node(const std::string& o, Node a, Node b) {
    Node n = node(tok(TokenKind::BinOp, o));
    n.children.push_back(std::move(a));
    n.children.push_back(std::move(b));
    return n;
}
Node call_node(const std::string& name, std::vector<Node> args) {
    return node(tok(TokenKind::Call, name), std::move(args));
}
Node assign_node(int target, Node rhs) {
    Node n = node(tok(TokenKind::Assign, "="));
    n.children.push_back(var_node(target));
    n.children.push_back(std::move(rhs));
    return n;
}

struct Filler {
    const GenConfig& cfg;
    Rng& rng;
    int nvars;

    std::vector<int> all_vars() const {
        std::vector<int> v(static_cast<size_t>(nvars));
        for (int i = 0; i < nvars; ++i) v[static_cast<size_t>(i)] = i + 1;
        return v;
    }

    std::vector<int> free_vars(const std::vector<int>& excluded) const {
        std::vector<int> v;
        for (int i = 1; i <= nvars; ++i)
            if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) v.push_back(i);
        return v;
    }

    int any_var() { return static_cast<int>(rng.range(1, nvars)); }

    Node leaf() {
        if (nvars == 0 || rng.chance(kDigitLeafP)) return digit_node(static_cast<int>(rng.below(10)));
        return var_node(any_var());
    }

    // A terminal right-hand side that avoids the no-op v = v.
    Node leaf_avoiding(int avoid) {
        if (nvars < 2 || rng.chance(kDigitLeafP)) return digit_node(static_cast<int>(rng.below(10)));
        int v = static_cast<int>(rng.range(1, nvars - 1));
        if (v >= avoid) ++v;
        return var_node(v);
    }

    // ne-style operator expression of the given depth (0, 1, or 2 edges).
    Node ne_expr(int depth) {
        if (depth <= 0) return leaf();
        if (depth == 1) return op_node(rng.pick(value_ops()), leaf(), leaf());
        int shape = static_cast<int>(rng.below(3));
        Node a = shape == 1 ? leaf() : ne_expr(1);
        Node b = shape == 0 ? leaf() : ne_expr(1);
        return op_node(rng.pick(value_ops()), std::move(a), std::move(b));
    }

    int draw_rhs_depth() {
        double r = rng.uniform();
        if (r < kRhsTerminalP) return 0;
        if (r < kRhsTerminalP + kRhsOneOpP) return 1;
        return 2;
    }

    Node math_call(bool allow_nested) {
        const auto& names = HlVocab::math_names();
        std::string name = names[rng.below(names.size())];
        int arity = HlVocab::call_arity(name);
        std::vector<Node> args;
        int nested_slot = allow_nested && rng.chance(0.15) ? static_cast<int>(rng.below(
                                                                 static_cast<std::uint64_t>(arity)))
                                                           : -1;
        for (int i = 0; i < arity; ++i) {
            if (i == nested_slot)
                args.push_back(math_call(false));
            else
                args.push_back(leaf());
        }
        return call_node(name, std::move(args));
    }

    // A replaced-leaf ne expression: one operator whose leaves may become
    // math-call results, keeping the statement depth within budget.
    Node math_ne_expr() {
        Node n = op_node(rng.pick(value_ops()), Node{}, Node{});
        for (Node& child : n.children) {
            if (rng.chance(kMathNeCallLeafP)) {
                Node c = math_call(false);
                child = std::move(c);
            } else {
                child = leaf();
            }
        }
        return n;
    }

    Node simple_stmt(const std::vector<int>& excluded) {
        if (cfg.family == Family::Karel)
            return call_node(HlVocab::karel_actions()[rng.below(8)], {});
        auto pool = free_vars(excluded);
        if (pool.empty()) {
            // Every variable is reserved by enclosing loop drivers; fall back
            // to a semantic no-op that cannot disturb them.
            int v = excluded.empty() ? 1 : excluded[0];
            return assign_node(v, var_node(v));
        }
        int target = rng.pick(pool);
        auto ne_rhs = [&] {
            int depth = draw_rhs_depth();
            if (depth == 0) return leaf_avoiding(target);
            return ne_expr(depth);
        };
        switch (cfg.family) {
            case Family::Math:
                return assign_node(target, math_call(true));
            case Family::Ne:
                return assign_node(target, ne_rhs());
            case Family::MathNe: {
                double r = rng.uniform();
                if (r < 0.35) return assign_node(target, math_call(true));
                if (r < 0.70) return assign_node(target, math_ne_expr());
                return assign_node(target, ne_rhs());
            }
            default:
                break;
        }
        return assign_node(target, ne_rhs());
    }

    Node flag_cond() { return node(tok(TokenKind::CallbackName, HlVocab::karel_flags()[rng.below(8)])); }

    Node compare_cond() {
        if (cfg.family == Family::Karel) return flag_cond();
        if (cfg.family == Family::Math)
            return call_node(rng.pick(compare_calls()), {leaf(), leaf()});
        Node base = op_node(rng.pick(compare_ops()), leaf(), leaf());
        if (cfg.family == Family::MathNe && rng.chance(0.3))
            base = call_node(rng.pick(compare_calls()), {leaf(), leaf()});
        if (rng.chance(kJunctionP)) {
            Node other = op_node(rng.pick(compare_ops()), leaf(), leaf());
            Node junction = node(tok(TokenKind::BinOp, rng.chance(0.5) ? "||" : "&&"));
            junction.children.push_back(std::move(base));
            junction.children.push_back(std::move(other));
            return junction;
        }
        return base;
    }

    Node fill_branch(const SkelNode& skel, const std::vector<int>& excluded, int loop_depth) {
        Node n = node(tok(TokenKind::If, "if"));
        n.children.push_back(compare_cond());
        fill_into(n, skel.body, excluded, loop_depth);
        if (loop_depth > 0 && rng.chance(kContinueP))
            n.children.push_back(node(tok(TokenKind::Continue, "continue")));
        return n;
    }

    // A driver update occupies one body statement slot, keeping the overall
    // statement count on budget.
    static Skeleton consume_one_slot(const Skeleton& body) {
        Skeleton reduced = body;
        for (size_t i = 0; i < reduced.size(); ++i) {
            if (reduced[i].kind != SkelNode::Stmts) continue;
            if (--reduced[i].count == 0) reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
            return reduced;
        }
        return reduced;
    }

    Node fill_loop(const SkelNode& skel, const std::vector<int>& excluded, int loop_depth) {
        Node n = node(tok(TokenKind::While, "while"));
        std::vector<int> body_excluded = excluded;
        if (cfg.family == Family::Karel) {
            n.children.push_back(flag_cond());
        } else if (cfg.family == Family::Math && rng.chance(kMathDrivenLoopP)) {
            // Strict comparison plus a clamping first statement: one pass at
            // most, regardless of inputs.
            auto pool = free_vars(excluded);
            if (pool.empty()) {
                // No free driver: degenerate to a never-entered loop.
                n.children.push_back(op_node("<", var_node(1), var_node(1)));
                fill_into(n, skel.body, excluded, loop_depth + 1);
                return n;
            }
            int driver = rng.pick(pool);
            Node limit;
            auto pool2 = free_vars(excluded);
            pool2.erase(std::remove(pool2.begin(), pool2.end(), driver), pool2.end());
            int limit_var = 0;
            if (pool2.size() >= 2 && rng.chance(0.5)) {
                limit_var = rng.pick(pool2);
                limit = var_node(limit_var);
            } else {
                limit = digit_node(static_cast<int>(rng.range(1, 9)));
            }
            bool ascending = rng.chance(0.5);
            const char* pred = ascending ? "isless" : "isgreater";
            const char* clamp = ascending ? "fmax" : "fmin";
            n.children.push_back(call_node(pred, {var_node(driver), Node(limit)}));
            n.children.push_back(
                assign_node(driver, call_node(clamp, {var_node(driver), std::move(limit)})));
            body_excluded.push_back(driver);
            if (limit_var) body_excluded.push_back(limit_var);
            fill_into(n, consume_one_slot(skel.body), body_excluded, loop_depth + 1);
            return n;
        } else if (cfg.family != Family::Math && rng.chance(kCountedLoopP)) {
            // Counted loop: `driver` steps toward the limit first thing every
            // iteration, so a continue later in the body cannot starve it.
            auto pool = free_vars(excluded);
            if (pool.empty()) {
                n.children.push_back(op_node("<", var_node(1), var_node(1)));
                fill_into(n, skel.body, excluded, loop_depth + 1);
                return n;
            }
            int driver = rng.pick(pool);
            Node limit;
            auto pool2 = free_vars(excluded);
            pool2.erase(std::remove(pool2.begin(), pool2.end(), driver), pool2.end());
            int limit_var = 0;
            if (pool2.size() >= 2 && rng.chance(0.5)) {
                limit_var = rng.pick(pool2);
                limit = var_node(limit_var);
            } else {
                limit = digit_node(static_cast<int>(rng.range(2, 9)));
            }
            std::string cmp = rng.pick(below_ops());
            if (rng.chance(0.5)) {
                n.children.push_back(op_node(cmp, var_node(driver), std::move(limit)));
            } else {
                std::string flipped = cmp == "<" ? ">" : ">=";
                n.children.push_back(op_node(flipped, std::move(limit), var_node(driver)));
            }
            int step = static_cast<int>(rng.range(1, 3));
            n.children.push_back(
                assign_node(driver, op_node("+", var_node(driver), digit_node(step))));
            body_excluded.push_back(driver);
            if (limit_var) body_excluded.push_back(limit_var);
            fill_into(n, consume_one_slot(skel.body), body_excluded, loop_depth + 1);
            return n;
        } else {
            n.children.push_back(compare_cond());
        }
        fill_into(n, skel.body, body_excluded, loop_depth + 1);
        return n;
    }

    void fill_into(Node& parent, const Skeleton& blocks, const std::vector<int>& excluded,
                   int loop_depth) {
        for (const SkelNode& b : blocks) {
            switch (b.kind) {
                case SkelNode::Stmts:
                    for (int i = 0; i < b.count; ++i)
                        parent.children.push_back(simple_stmt(excluded));
                    break;
                case SkelNode::Loop:
                    parent.children.push_back(fill_loop(b, excluded, loop_depth));
                    break;
                case SkelNode::Branch:
                    parent.children.push_back(fill_branch(b, excluded, loop_depth));
                    break;
            }
        }
    }
};

int skel_cost(const SkelNode& n) {
    if (n.kind == SkelNode::Stmts) return n.count;
    int c = 1;
    for (const SkelNode& b : n.body) c += skel_cost(b);
    return c;
}

bool has_control(const Skeleton& s) {
    for (const SkelNode& n : s)
        if (n.kind != SkelNode::Stmts) return true;
    return false;
}

SkelNode stmts(int count) {
    SkelNode n;
    n.kind = SkelNode::Stmts;
    n.count = count;
    return n;
}

SkelNode wrap(SkelNode::Kind kind, std::vector<SkelNode> body) {
    SkelNode n;
    n.kind = kind;
    n.body = std::move(body);
    return n;
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Karel: return "karel";
        case Family::Math: return "math";
        case Family::Ne: return "ne";
        case Family::MathNe: return "math_ne";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "karel") return Family::Karel;
    if (name == "math") return Family::Math;
    if (name == "ne") return Family::Ne;
    if (name == "math_ne") return Family::MathNe;
    throw DataError("unknown family: " + name);
}

const char* length_class_name(LengthClass c) { return c == LengthClass::S ? "S" : "L"; }

LengthClass length_class_from_name(const std::string& name) {
    if (name == "S" || name == "s") return LengthClass::S;
    if (name == "L" || name == "l") return LengthClass::L;
    throw DataError("unknown length class: " + name);
}

int statement_target(LengthClass c) { return c == LengthClass::S ? 15 : 30; }

void GenConfig::validate() const {
    if (count < 1) throw DataError("GenConfig: count must be >= 1");
    if (family != Family::Karel) {
        if (var_min < 2 || var_max > 16 || var_min > var_max)
            throw DataError("GenConfig: var range must sit within [2,16]");
    }
    if (loop_weight < 0.0 || loop_weight > 1.0 || branch_weight < 0.0 || branch_weight > 1.0)
        throw DataError("GenConfig: weights must sit within [0,1]");
    if (io_vectors < 1) throw DataError("GenConfig: io_vectors must be >= 1");
}

GenConfig default_config(Family f, LengthClass c, std::uint64_t seed, std::size_t count) {
    GenConfig cfg;
    cfg.family = f;
    cfg.length_class = c;
    cfg.seed = seed;
    cfg.count = count;
    if (f == Family::Karel) {
        cfg.var_min = 2;  // unused; karel programs bind no variables
        cfg.var_max = 2;
    } else if (c == LengthClass::S) {
        cfg.var_min = 3;
        cfg.var_max = 8;
    } else {
        cfg.var_min = f == Family::Math ? 10 : 9;
        cfg.var_max = 15;
    }
    return cfg;
}

Skeleton gen_cfg(const GenConfig& cfg, Rng& rng, int statement_budget) {
    Skeleton skel;
    int remaining = statement_budget;
    const double lw = cfg.loop_weight;
    const double bw = cfg.branch_weight;
    while (remaining > 0) {
        double w[6] = {1.2, 0.4 * bw, 0.4 * lw, 0.4 * lw * bw, 0.2 * lw * bw, 0.2 * lw * lw};
        const int mincost[6] = {1, 2, 2, 4, 4, 3};
        double total = 0.0;
        for (int i = 0; i < 6; ++i) {
            if (i != 0 && mincost[i] > remaining) w[i] = 0.0;
            total += w[i];
        }
        double r = rng.uniform() * total;
        int shape = 0;
        for (int i = 0; i < 6; ++i) {
            if (r < w[i]) {
                shape = i;
                break;
            }
            r -= w[i];
        }
        SkelNode n;
        switch (shape) {
            case 0:
                n = stmts(1 + static_cast<int>(rng.below(
                              static_cast<std::uint64_t>(std::min(6, remaining)))));
                break;
            case 1:
                n = wrap(SkelNode::Branch, {stmts(1 + static_cast<int>(rng.below(3)))});
                break;
            case 2:
                n = wrap(SkelNode::Loop, {stmts(1 + static_cast<int>(rng.below(3)))});
                break;
            case 3:
                n = wrap(SkelNode::Loop,
                         {stmts(1 + static_cast<int>(rng.below(2))),
                          wrap(SkelNode::Branch, {stmts(1 + static_cast<int>(rng.below(2)))})});
                break;
            case 4:
                n = wrap(SkelNode::Branch,
                         {stmts(1 + static_cast<int>(rng.below(2))),
                          wrap(SkelNode::Loop, {stmts(1 + static_cast<int>(rng.below(2)))})});
                break;
            case 5:
                n = wrap(SkelNode::Loop,
                         {wrap(SkelNode::Loop, {stmts(1 + static_cast<int>(rng.below(2)))})});
                break;
        }
        remaining -= skel_cost(n);
        skel.push_back(std::move(n));
    }
    if (cfg.family == Family::Karel && !has_control(skel))
        skel.push_back(wrap(SkelNode::Loop, {stmts(1 + static_cast<int>(rng.below(2)))}));
    return skel;
}

Node gen_program(const GenConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    Rng rng(seed);
    const bool karel = cfg.family == Family::Karel;
    // Smaller headers dominate, but the full range stays reachable.
    int nvars = karel ? 0
                      : static_cast<int>(std::min(rng.range(cfg.var_min, cfg.var_max),
                                                  rng.range(cfg.var_min, cfg.var_max)));
    const int target = statement_target(cfg.length_class);
    double draw = rng.normal(static_cast<double>(target), target / 4.0);
    int budget = static_cast<int>(std::llround(draw));
    budget = std::clamp(budget, 3, 2 * target);
    const bool want_return = !karel && rng.chance(kReturnP);
    if (want_return) budget = std::max(2, budget - 1);

    Skeleton skel = gen_cfg(cfg, rng, budget);
    Node root = node(tok(TokenKind::FuncDef, karel ? "main" : "func"));
    for (int k = 1; k <= nvars; ++k) {
        Node p = node(tok(TokenKind::Param, "param"));
        p.children.push_back(node(rng.chance(0.5) ? tok(TokenKind::TypeInt, "int")
                                                  : tok(TokenKind::TypeDouble, "double")));
        p.children.push_back(var_node(k));
        root.children.push_back(std::move(p));
    }
    Filler filler{cfg, rng, nvars};
    filler.fill_into(root, skel, {}, 0);
    if (want_return) {
        Node ret = node(tok(TokenKind::Return, "return"));
        ret.children.push_back(var_node(static_cast<int>(rng.range(1, nvars))));
        root.children.push_back(std::move(ret));
    }
    return root;
}

std::vector<std::vector<std::int64_t>> gen_inputs(const GenConfig& cfg, std::uint64_t sample_seed,
                                                  int nvars) {
    Rng rng(derive_seed(sample_seed, "io"));
    std::vector<std::vector<std::int64_t>> vectors;
    vectors.reserve(static_cast<size_t>(cfg.io_vectors));
    for (int v = 0; v < cfg.io_vectors; ++v) {
        std::vector<std::int64_t> in;
        if (cfg.family == Family::Karel) {
            // Callback tape: mostly-true flags so loops make progress before
            // the tape runs dry.
            std::int64_t len = rng.range(10, 18);
            for (std::int64_t i = 0; i < len; ++i) in.push_back(rng.chance(0.6) ? 1 : 0);
        } else {
            for (int i = 0; i < nvars; ++i) in.push_back(rng.range(-9, 9));
        }
        vectors.push_back(std::move(in));
    }
    return vectors;
}

std::vector<Sample> gen_dataset(const GenConfig& cfg) {
    cfg.validate();
    std::vector<Sample> out;
    out.reserve(cfg.count);
    std::unordered_set<std::uint64_t> seen;
    ExecLimits limits;
    limits.max_steps = kGenMaxSteps;

    for (std::size_t i = 0; i < cfg.count; ++i) {
        bool accepted = false;
        for (std::uint64_t attempt = 0; attempt < 1000 && !accepted; ++attempt) {
            std::uint64_t s = derive_seed(cfg.seed, "sample", i * 1024 + attempt);
            Node tree = gen_program(cfg, s);
            std::uint64_t h = tree_hash(tree);
            if (seen.count(h)) continue;

            AsmProgram prog;
            try {
                prog = compile(tree);
            } catch (const CompileError&) {
                continue;  // structural guards should prevent this; redraw anyway
            }
            int nvars = 0;
            for (const Node& c : tree.children)
                if (c.tok.kind == TokenKind::Param) ++nvars;
            auto inputs = gen_inputs(cfg, s, nvars);
            std::vector<IoPair> pairs;
            bool ok = true;
            for (auto& in : inputs) {
                try {
                    ExecResult r = execute(prog, in, limits);
                    pairs.push_back(IoPair{in, r.outputs, r.trace});
                } catch (const ExecError&) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;

            seen.insert(h);
            Sample sample;
            char idbuf[64];
            std::snprintf(idbuf, sizeof idbuf, "%s_%s_%05zu", family_name(cfg.family),
                          length_class_name(cfg.length_class), i);
            sample.id = idbuf;
            sample.tree = std::move(tree);
            sample.asm_tokens = prog.tokens();
            sample.io_pairs = std::move(pairs);
            sample.seed = s;
            out.push_back(std::move(sample));
            accepted = true;
        }
        if (!accepted)
            throw DataError("gen_dataset: could not fill sample slot " + std::to_string(i));
    }
    return out;
}

}  // namespace relift
