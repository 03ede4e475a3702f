#include "support/hl_eval.hpp"

#include <map>

#include "relift/refmath.hpp"
#include "relift/vocab.hpp"

namespace relift::testsupport {

namespace {

std::int64_t as_i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }
std::uint64_t as_u64(std::int64_t v) { return static_cast<std::uint64_t>(v); }

enum class Flow { Normal, Continue, Returned };

struct Evaluator {
    const std::vector<std::int64_t>& inputs;
    long budget;
    std::map<int, std::int64_t> vars;  // var index -> value
    std::vector<std::string> trace;
    size_t tape_pos = 0;
    std::int64_t ret_value = 0;

    void tick() {
        if (--budget < 0) throw ExecError("hl_eval: operation budget exhausted");
    }

    static int var_index(const std::string& name) { return std::stoi(name.substr(1)); }

    std::int64_t eval(const Node& e) {
        tick();
        switch (e.tok.kind) {
            case TokenKind::Var: {
                auto it = vars.find(var_index(e.tok.lexeme));
                if (it == vars.end())
                    throw ExecError("hl_eval: read of never-assigned variable " + e.tok.lexeme);
                return it->second;
            }
            case TokenKind::IntLit:
                return std::stoll(e.tok.lexeme);
            case TokenKind::CallbackName:
                return callback(e.tok.lexeme);
            case TokenKind::Call: {
                const std::string& name = e.tok.lexeme;
                if (HlVocab::is_karel_action(name)) return callback(name);
                std::int64_t a = e.children.size() > 0 ? eval(e.children[0]) : 0;
                std::int64_t b = e.children.size() > 1 ? eval(e.children[1]) : 0;
                bool ovf = false;
                return ref_math(name, a, b, &ovf);
            }
            case TokenKind::BinOp: {
                std::int64_t a = eval(e.children.at(0));
                std::int64_t b = eval(e.children.at(1));
                return binop(e.tok.lexeme, a, b);
            }
            default:
                throw ExecError(std::string("hl_eval: bad expression token ") +
                                kind_name(e.tok.kind));
        }
    }

    std::int64_t callback(const std::string& name) {
        trace.push_back(name);
        return tape_pos < inputs.size() ? inputs[tape_pos++] : 0;
    }

    static std::int64_t truth(std::int64_t v) { return v != 0 ? 1 : 0; }

    std::int64_t binop(const std::string& op, std::int64_t a, std::int64_t b) {
        if (op == "+") return as_i64(as_u64(a) + as_u64(b));
        if (op == "-") return as_i64(as_u64(a) - as_u64(b));
        if (op == "*") return as_i64(as_u64(a) * as_u64(b));
        if (op == "/") {
            if (b == 0) return 0;
            if (a == INT64_MIN && b == -1) return INT64_MIN;
            return a / b;
        }
        if (op == "<<") return as_i64(as_u64(a) << (as_u64(b) & 63));
        if (op == ">>") return as_i64(as_u64(a) >> (as_u64(b) & 63));
        if (op == "&") return a & b;
        if (op == "|") return a | b;
        if (op == "^") return a ^ b;
        if (op == "==") return a == b ? 1 : 0;
        if (op == "<") return a < b ? 1 : 0;
        if (op == "<=") return a <= b ? 1 : 0;
        if (op == ">") return a > b ? 1 : 0;
        if (op == ">=") return a >= b ? 1 : 0;
        if (op == "||") return truth(a) | truth(b);
        if (op == "&&") return truth(a) & truth(b);
        throw ExecError("hl_eval: unknown operator " + op);
    }

    Flow run_stmt(const Node& s) {
        tick();
        switch (s.tok.kind) {
            case TokenKind::Assign:
                vars[var_index(s.children.at(0).tok.lexeme)] = eval(s.children.at(1));
                return Flow::Normal;
            case TokenKind::While:
                for (;;) {
                    if (truth(eval(s.children.at(0))) == 0) return Flow::Normal;
                    for (size_t i = 1; i < s.children.size(); ++i) {
                        Flow f = run_stmt(s.children[i]);
                        if (f == Flow::Returned) return f;
                        if (f == Flow::Continue) break;
                    }
                }
            case TokenKind::If:
                if (truth(eval(s.children.at(0))) != 0) {
                    for (size_t i = 1; i < s.children.size(); ++i) {
                        Flow f = run_stmt(s.children[i]);
                        if (f != Flow::Normal) return f;
                    }
                }
                return Flow::Normal;
            case TokenKind::Continue:
                return Flow::Continue;
            case TokenKind::Return:
                ret_value = s.children.empty() ? 0 : eval(s.children[0]);
                return Flow::Returned;
            default:
                eval(s);  // expression statement
                return Flow::Normal;
        }
    }
};

}  // namespace

HlResult hl_eval(const Node& program, const std::vector<std::int64_t>& inputs, long max_ops) {
    if (program.tok.kind != TokenKind::FuncDef)
        throw ExecError("hl_eval: root must be a function definition");
    Evaluator ev{inputs, max_ops};
    size_t body_start = 0;
    int arg = 0;
    for (size_t i = 0; i < program.children.size(); ++i) {
        const Node& c = program.children[i];
        if (c.tok.kind != TokenKind::Param) break;
        ev.vars[Evaluator::var_index(c.children.at(1).tok.lexeme)] =
            static_cast<size_t>(arg) < inputs.size() ? inputs[arg] : 0;
        ++arg;
        body_start = i + 1;
    }
    HlResult res;
    for (size_t i = body_start; i < program.children.size(); ++i) {
        Flow f = ev.run_stmt(program.children[i]);
        if (f == Flow::Returned) {
            res.returned = true;
            break;
        }
    }
    res.trace = std::move(ev.trace);
    if (res.returned) {
        res.outputs.push_back(ev.ret_value);
    } else {
        for (const auto& [idx, val] : ev.vars) res.outputs.push_back(val);
    }
    return res;
}

}  // namespace relift::testsupport
