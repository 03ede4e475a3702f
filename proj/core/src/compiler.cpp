#include "relift/compiler.hpp"

#include "relift/vocab.hpp"

namespace relift {

namespace {

std::int64_t var_offset(const std::string& name) {
    // vK lives at 4+4K; names outside v1..v16 never pass the vocabulary.
    int k = std::stoi(name.substr(1));
    return 4 + 4 * static_cast<std::int64_t>(k);
}

class CodeGen {
public:
    explicit CodeGen(const Node& program) : program_(program) {}

    AsmProgram run() {
        if (program_.tok.kind != TokenKind::FuncDef)
            throw CompileError("compile: root must be a function definition", "");
        out_.entry = program_.tok.lexeme;
        emit_label(program_.tok.lexeme);

        size_t body_start = 0;
        int arg_index = 0;
        for (size_t i = 0; i < program_.children.size(); ++i) {
            const Node& c = program_.children[i];
            if (c.tok.kind != TokenKind::Param) break;
            cur_stmt_path_ = lcrs_child_path("", i);
            if (c.children.size() != 2 || c.children[1].tok.kind != TokenKind::Var ||
                (c.children[0].tok.kind != TokenKind::TypeInt &&
                 c.children[0].tok.kind != TokenKind::TypeDouble))
                fail("malformed parameter (expected type then variable)");
            if (arg_index >= 16) fail("too many parameters (at most 16)");
            emit(Opcode::Sw, {Operand::make_reg(REG_A0 + arg_index),
                              Operand::make_frame(var_offset(c.children[1].tok.lexeme))});
            ++arg_index;
            body_start = i + 1;
        }
        for (size_t i = body_start; i < program_.children.size(); ++i) {
            if (program_.children[i].tok.kind == TokenKind::Param) {
                cur_stmt_path_ = lcrs_child_path("", i);
                fail("parameter after first body statement");
            }
            statement(program_.children[i], lcrs_child_path("", i));
        }
        emit_label(exit_label());
        out_.rebuild_labels();
        return std::move(out_);
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw CompileError(msg, cur_stmt_path_); }

    std::string exit_label() const { return "$B0"; }

    std::string new_label() {
        int id = next_label_++;
        if (id > 149) fail("label budget exceeded");
        return "$B" + std::to_string(id);
    }

    void emit(Opcode op, std::vector<Operand> operands) {
        out_.code.push_back({op, std::move(operands)});
    }

    void emit_label(const std::string& name) {
        out_.code.push_back({Opcode::LabelDef, {Operand::make_label(name)}});
    }

    int alloc_temp() {
        if (temps_ == 8) fail("temp-register-exhaustion (expression too deep)");
        return ++temps_;  // $1..$8
    }

    void release_temp(int reg) {
        if (reg != temps_) fail("internal: temp release out of order");
        --temps_;
    }

    // Evaluates an expression, returns the temp register holding the value.
    int eval(const Node& e) {
        switch (e.tok.kind) {
            case TokenKind::Var: {
                int r = alloc_temp();
                emit(Opcode::Lw,
                     {Operand::make_reg(r), Operand::make_frame(var_offset(e.tok.lexeme))});
                return r;
            }
            case TokenKind::IntLit: {
                int r = alloc_temp();
                emit(Opcode::Li, {Operand::make_reg(r), Operand::make_imm(std::stoll(e.tok.lexeme))});
                return r;
            }
            case TokenKind::CallbackName: {
                if (!e.children.empty()) fail("flag '" + e.tok.lexeme + "' takes no children");
                emit(Opcode::Jal, {Operand::make_name(e.tok.lexeme)});
                int r = alloc_temp();
                emit(Opcode::Move, {Operand::make_reg(r), Operand::make_reg(REG_V0)});
                return r;
            }
            case TokenKind::Call:
                return eval_call(e);
            case TokenKind::BinOp:
                return eval_binop(e);
            default:
                fail(std::string("token '") + kind_name(e.tok.kind) +
                     "' is not valid in expression position");
        }
    }

    int eval_call(const Node& e) {
        int arity = HlVocab::call_arity(e.tok.lexeme);
        if (arity < 0) fail("unknown call target '" + e.tok.lexeme + "'");
        if (static_cast<int>(e.children.size()) != arity)
            fail("call '" + e.tok.lexeme + "' expects " + std::to_string(arity) +
                 " argument(s), has " + std::to_string(e.children.size()));
        int r1 = 0, r2 = 0;
        if (arity >= 1) r1 = eval(e.children[0]);
        if (arity >= 2) r2 = eval(e.children[1]);
        if (arity >= 1) emit(Opcode::Move, {Operand::make_reg(REG_A0), Operand::make_reg(r1)});
        if (arity >= 2) emit(Opcode::Move, {Operand::make_reg(REG_A0 + 1), Operand::make_reg(r2)});
        emit(Opcode::Jal, {Operand::make_name(e.tok.lexeme)});
        if (arity >= 2) release_temp(r2);
        if (arity >= 1) release_temp(r1);
        int rd = alloc_temp();
        emit(Opcode::Move, {Operand::make_reg(rd), Operand::make_reg(REG_V0)});
        return rd;
    }

    // Coerces the value in r to 0/1 using the scratch register holding 1.
    void boolify(int r, int one_reg) {
        emit(Opcode::Seq, {Operand::make_reg(r), Operand::make_reg(r), Operand::make_reg(REG_ZERO)});
        emit(Opcode::Xor, {Operand::make_reg(r), Operand::make_reg(r), Operand::make_reg(one_reg)});
    }

    int eval_binop(const Node& e) {
        if (e.children.size() != 2)
            fail("operator '" + e.tok.lexeme + "' expects 2 operands, has " +
                 std::to_string(e.children.size()));
        int r1 = eval(e.children[0]);
        int r2 = eval(e.children[1]);
        const std::string& op = e.tok.lexeme;
        auto three = [&](Opcode oc, int a, int b) {
            emit(oc, {Operand::make_reg(r1), Operand::make_reg(a), Operand::make_reg(b)});
        };
        if (op == "+") three(Opcode::Add, r1, r2);
        else if (op == "-") three(Opcode::Sub, r1, r2);
        else if (op == "*") three(Opcode::Mul, r1, r2);
        else if (op == "/") three(Opcode::Div, r1, r2);
        else if (op == "<<") three(Opcode::Sll, r1, r2);
        else if (op == ">>") three(Opcode::Srl, r1, r2);
        else if (op == "&") three(Opcode::And, r1, r2);
        else if (op == "|") three(Opcode::Or, r1, r2);
        else if (op == "^") three(Opcode::Xor, r1, r2);
        else if (op == "==") three(Opcode::Seq, r1, r2);
        else if (op == "<") three(Opcode::Slt, r1, r2);
        else if (op == "<=") three(Opcode::Sle, r1, r2);
        else if (op == ">") three(Opcode::Slt, r2, r1);   // a>b  ==  b<a
        else if (op == ">=") three(Opcode::Sle, r2, r1);  // a>=b ==  b<=a
        else if (op == "||" || op == "&&") {
            int one = alloc_temp();
            emit(Opcode::Li, {Operand::make_reg(one), Operand::make_imm(1)});
            boolify(r1, one);
            boolify(r2, one);
            three(op == "||" ? Opcode::Or : Opcode::And, r1, r2);
            release_temp(one);
        } else {
            fail("unknown operator '" + op + "'");
        }
        release_temp(r2);
        return r1;
    }

    void statement(const Node& s, const std::string& path) {
        cur_stmt_path_ = path;
        switch (s.tok.kind) {
            case TokenKind::Assign: {
                if (s.children.size() != 2) fail("assignment expects a target and a value");
                if (s.children[0].tok.kind != TokenKind::Var)
                    fail("assignment target must be a variable");
                int r = eval(s.children[1]);
                cur_stmt_path_ = path;
                emit(Opcode::Sw, {Operand::make_reg(r),
                                  Operand::make_frame(var_offset(s.children[0].tok.lexeme))});
                release_temp(r);
                return;
            }
            case TokenKind::While: {
                if (s.children.empty()) fail("loop without a condition");
                std::string head = new_label();
                std::string exit = new_label();
                emit_label(head);
                int r = eval(s.children[0]);
                cur_stmt_path_ = path;
                emit(Opcode::Beq, {Operand::make_reg(r), Operand::make_reg(REG_ZERO),
                                   Operand::make_label(exit)});
                release_temp(r);
                loop_heads_.push_back(head);
                for (size_t i = 1; i < s.children.size(); ++i)
                    statement(s.children[i], lcrs_child_path(path, i));
                loop_heads_.pop_back();
                emit(Opcode::J, {Operand::make_label(head)});
                emit_label(exit);
                return;
            }
            case TokenKind::If: {
                if (s.children.empty()) fail("branch without a condition");
                std::string end = new_label();
                int r = eval(s.children[0]);
                cur_stmt_path_ = path;
                emit(Opcode::Beq, {Operand::make_reg(r), Operand::make_reg(REG_ZERO),
                                   Operand::make_label(end)});
                release_temp(r);
                for (size_t i = 1; i < s.children.size(); ++i)
                    statement(s.children[i], lcrs_child_path(path, i));
                emit_label(end);
                return;
            }
            case TokenKind::Continue: {
                if (!s.children.empty()) fail("continue carries children");
                if (loop_heads_.empty()) fail("continue outside a loop");
                emit(Opcode::J, {Operand::make_label(loop_heads_.back())});
                return;
            }
            case TokenKind::Return: {
                if (s.children.size() > 1) fail("return with multiple values");
                if (s.children.empty()) {
                    emit(Opcode::Move, {Operand::make_reg(REG_V0), Operand::make_reg(REG_ZERO)});
                } else {
                    int r = eval(s.children[0]);
                    cur_stmt_path_ = path;
                    emit(Opcode::Move, {Operand::make_reg(REG_V0), Operand::make_reg(r)});
                    release_temp(r);
                }
                emit(Opcode::Li, {Operand::make_reg(REG_V1), Operand::make_imm(1)});
                emit(Opcode::J, {Operand::make_label(exit_label())});
                return;
            }
            case TokenKind::FuncDef:
            case TokenKind::Param:
            case TokenKind::None:
                fail(std::string("token '") + kind_name(s.tok.kind) +
                     "' is not valid in statement position");
            default: {
                // Expression statement: evaluate and discard.
                int r = eval(s);
                cur_stmt_path_ = path;
                release_temp(r);
                return;
            }
        }
    }

    const Node& program_;
    AsmProgram out_;
    int next_label_ = 1;
    int temps_ = 0;
    std::vector<std::string> loop_heads_;
    std::string cur_stmt_path_;
};

}  // namespace

AsmProgram compile(const Node& program) { return CodeGen(program).run(); }

}  // namespace relift
