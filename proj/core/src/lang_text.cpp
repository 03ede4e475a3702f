#include "relift/lang_text.hpp"

#include <cctype>
#include <sstream>

#include "relift/vocab.hpp"

namespace relift {

namespace {

int op_prec(const std::string& op) {
    if (op == "*" || op == "/") return 10;
    if (op == "+" || op == "-") return 9;
    if (op == "<<" || op == ">>") return 8;
    if (op == "<" || op == "<=" || op == ">" || op == ">=") return 7;
    if (op == "==") return 6;
    if (op == "&") return 5;
    if (op == "^") return 4;
    if (op == "|") return 3;
    if (op == "&&") return 2;
    if (op == "||") return 1;
    return -1;
}

void print_expr_rec(const Node& e, std::string& out, int parent_prec, bool right_operand) {
    switch (e.tok.kind) {
        case TokenKind::Var:
        case TokenKind::IntLit:
        case TokenKind::CallbackName:
            out += e.tok.lexeme;
            return;
        case TokenKind::Call: {
            int arity = HlVocab::call_arity(e.tok.lexeme);
            if (arity < 0) throw ShapeError("print: unknown call target '" + e.tok.lexeme + "'");
            if (static_cast<int>(e.children.size()) != arity)
                throw ShapeError("print: call '" + e.tok.lexeme + "' expects " +
                                 std::to_string(arity) + " args, has " +
                                 std::to_string(e.children.size()));
            out += e.tok.lexeme;
            out += '(';
            for (size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += ',';
                print_expr_rec(e.children[i], out, 0, false);
            }
            out += ')';
            return;
        }
        case TokenKind::BinOp: {
            if (e.children.size() != 2)
                throw ShapeError("print: operator '" + e.tok.lexeme + "' expects 2 operands, has " +
                                 std::to_string(e.children.size()));
            int prec = op_prec(e.tok.lexeme);
            if (prec < 0) throw ShapeError("print: unknown operator '" + e.tok.lexeme + "'");
            // All operators associate left; equal precedence needs parens only on the right.
            bool paren = prec < parent_prec || (prec == parent_prec && right_operand);
            if (paren) out += '(';
            print_expr_rec(e.children[0], out, prec, false);
            out += e.tok.lexeme;
            print_expr_rec(e.children[1], out, prec, true);
            if (paren) out += ')';
            return;
        }
        default:
            throw ShapeError(std::string("print: token '") + kind_name(e.tok.kind) +
                             "' is not an expression");
    }
}

void print_stmt(const Node& s, std::string& out, int indent) {
    out.append(static_cast<size_t>(indent) * 4, ' ');
    switch (s.tok.kind) {
        case TokenKind::Assign: {
            if (s.children.size() != 2 || s.children[0].tok.kind != TokenKind::Var)
                throw ShapeError("print: malformed assignment");
            out += s.children[0].tok.lexeme;
            out += '=';
            print_expr_rec(s.children[1], out, 0, false);
            out += ";\n";
            return;
        }
        case TokenKind::While:
        case TokenKind::If: {
            if (s.children.empty())
                throw ShapeError("print: loop or branch without a condition");
            out += s.tok.kind == TokenKind::While ? "while(" : "if(";
            print_expr_rec(s.children[0], out, 0, false);
            out += "){\n";
            for (size_t i = 1; i < s.children.size(); ++i)
                print_stmt(s.children[i], out, indent + 1);
            out.append(static_cast<size_t>(indent) * 4, ' ');
            out += "}\n";
            return;
        }
        case TokenKind::Continue:
            if (!s.children.empty()) throw ShapeError("print: continue carries children");
            out += "continue;\n";
            return;
        case TokenKind::Return: {
            if (s.children.size() > 1) throw ShapeError("print: return with multiple values");
            out += "return";
            if (!s.children.empty()) {
                out += ' ';
                print_expr_rec(s.children[0], out, 0, false);
            }
            out += ";\n";
            return;
        }
        default:
            // Expression statement: value computed and discarded.
            print_expr_rec(s, out, 0, false);
            out += ";\n";
            return;
    }
}

}  // namespace

std::string print_expr(const Node& expr) {
    std::string out;
    print_expr_rec(expr, out, 0, false);
    return out;
}

std::string pretty_print(const Node& program) {
    if (program.tok.kind != TokenKind::FuncDef)
        throw ShapeError("print: root must be a function definition");
    std::string out = "int " + program.tok.lexeme + "(";
    bool first = true;
    size_t body_start = 0;
    for (size_t i = 0; i < program.children.size(); ++i) {
        const Node& c = program.children[i];
        if (c.tok.kind != TokenKind::Param) break;
        if (c.children.size() != 2 || c.children[1].tok.kind != TokenKind::Var ||
            (c.children[0].tok.kind != TokenKind::TypeInt &&
             c.children[0].tok.kind != TokenKind::TypeDouble))
            throw ShapeError("print: malformed parameter");
        if (!first) out += ", ";
        first = false;
        out += c.children[0].tok.kind == TokenKind::TypeInt ? "int " : "double ";
        out += c.children[1].tok.lexeme;
        body_start = i + 1;
    }
    out += "){\n";
    for (size_t i = body_start; i < program.children.size(); ++i) {
        if (program.children[i].tok.kind == TokenKind::Param)
            throw ShapeError("print: parameter after first body statement");
        print_stmt(program.children[i], out, 1);
    }
    out += "}\n";
    return out;
}

namespace {

struct Lexeme {
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Lexeme& peek() const { return cur_; }

    Lexeme take() {
        Lexeme out = cur_;
        advance();
        return out;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "syntax error at line " << cur_.line << ", col " << cur_.col << ": " << msg;
        if (!cur_.text.empty()) os << " (near '" << cur_.text << "')";
        throw ParseError(os.str());
    }

private:
    void advance() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
        cur_ = Lexeme{"", line_, col_};
        if (pos_ >= src_.size()) return;

        char c = src_[pos_];
        auto two = pos_ + 1 < src_.size() ? src_.substr(pos_, 2) : std::string();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = pos_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            cur_.text = src_.substr(pos_, j - pos_);
            col_ += static_cast<int>(j - pos_);
            pos_ = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = pos_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            cur_.text = src_.substr(pos_, j - pos_);
            col_ += static_cast<int>(j - pos_);
            pos_ = j;
        } else if (two == "<<" || two == ">>" || two == "<=" || two == ">=" || two == "==" ||
                   two == "||" || two == "&&") {
            cur_.text = two;
            col_ += 2;
            pos_ += 2;
        } else {
            cur_.text = std::string(1, c);
            col_ += 1;
            pos_ += 1;
        }
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Lexeme cur_;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    Node program() {
        expect("int");
        Lexeme name = lex_.take();
        if (name.text != "func" && name.text != "main")
            lex_.fail("expected function name 'func' or 'main', got '" + name.text + "'");
        Node root = node(tok(TokenKind::FuncDef, name.text));
        expect("(");
        if (lex_.peek().text != ")") {
            for (;;) {
                root.children.push_back(param());
                if (lex_.peek().text != ",") break;
                lex_.take();
            }
        }
        expect(")");
        expect("{");
        while (lex_.peek().text != "}") {
            if (lex_.peek().text.empty()) lex_.fail("unexpected end of input inside function body");
            root.children.push_back(statement());
        }
        expect("}");
        if (!lex_.peek().text.empty()) lex_.fail("trailing input after function body");
        return root;
    }

private:
    void expect(const std::string& text) {
        if (lex_.peek().text != text)
            lex_.fail("expected '" + text + "', got '" + lex_.peek().text + "'");
        lex_.take();
    }

    Node param() {
        Lexeme ty = lex_.take();
        if (ty.text != "int" && ty.text != "double")
            lex_.fail("expected parameter type, got '" + ty.text + "'");
        Lexeme name = lex_.take();
        auto t = HlVocab::instance().classify(name.text);
        if (!t || t->kind != TokenKind::Var)
            lex_.fail("expected parameter name v1..v16, got '" + name.text + "'");
        Token type_tok = ty.text == "int" ? tok(TokenKind::TypeInt, "int")
                                          : tok(TokenKind::TypeDouble, "double");
        return node(tok(TokenKind::Param, "param"), {node(type_tok), node(*t)});
    }

    Node statement() {
        const std::string head = lex_.peek().text;
        if (head == "while" || head == "if") {
            bool is_while = head == "while";
            lex_.take();
            expect("(");
            Node cond = expression(0);
            expect(")");
            expect("{");
            Node s = node(tok(is_while ? TokenKind::While : TokenKind::If, head), {std::move(cond)});
            while (lex_.peek().text != "}") {
                if (lex_.peek().text.empty()) lex_.fail("unexpected end of input inside block");
                s.children.push_back(statement());
            }
            expect("}");
            return s;
        }
        if (head == "continue") {
            lex_.take();
            expect(";");
            return node(tok(TokenKind::Continue, "continue"));
        }
        if (head == "return") {
            lex_.take();
            Node s = node(tok(TokenKind::Return, "return"));
            if (lex_.peek().text != ";") s.children.push_back(expression(0));
            expect(";");
            return s;
        }
        // Assignment or expression statement.
        Node e = expression(0, /*allow_assign_probe=*/true);
        if (assign_target_) {
            assign_target_ = false;
            Node rhs = expression(0);
            expect(";");
            return node(tok(TokenKind::Assign, "="), {std::move(e), std::move(rhs)});
        }
        expect(";");
        return e;
    }

    // Precedence climbing. With allow_assign_probe, a top-level 'var =' prefix
    // stops after the variable and flags an assignment instead.
    Node expression(int min_prec, bool allow_assign_probe = false) {
        Node lhs = primary();
        if (allow_assign_probe && lhs.tok.kind == TokenKind::Var && lex_.peek().text == "=") {
            lex_.take();
            assign_target_ = true;
            return lhs;
        }
        for (;;) {
            int prec = op_prec(lex_.peek().text);
            if (prec < 0 || prec < min_prec) break;
            Lexeme op = lex_.take();
            Node rhs = expression(prec + 1);
            lhs = node(tok(TokenKind::BinOp, op.text), {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    Node primary() {
        const Lexeme& p = lex_.peek();
        if (p.text == "(") {
            lex_.take();
            Node e = expression(0);
            expect(")");
            return e;
        }
        if (p.text.empty()) lex_.fail("unexpected end of input in expression");
        if (std::isdigit(static_cast<unsigned char>(p.text[0]))) {
            Lexeme num = lex_.take();
            if (num.text.size() != 1)
                lex_.fail("integer literal out of range (single digits 0..9 only): '" + num.text +
                          "'");
            return node(tok(TokenKind::IntLit, num.text));
        }
        Lexeme id = lex_.take();
        auto t = HlVocab::instance().classify(id.text);
        if (!t) lex_.fail("unknown identifier '" + id.text + "'");
        if (t->kind == TokenKind::Var) return node(*t);
        if (t->kind == TokenKind::CallbackName) return node(*t);
        if (t->kind == TokenKind::Call) {
            expect("(");
            Node c = node(*t);
            if (lex_.peek().text != ")") {
                for (;;) {
                    c.children.push_back(expression(0));
                    if (lex_.peek().text != ",") break;
                    lex_.take();
                }
            }
            expect(")");
            int arity = HlVocab::call_arity(id.text);
            if (static_cast<int>(c.children.size()) != arity)
                lex_.fail("call '" + id.text + "' expects " + std::to_string(arity) +
                          " argument(s), got " + std::to_string(c.children.size()));
            return c;
        }
        lex_.fail("token '" + id.text + "' cannot start an expression");
    }

    Lexer lex_;
    bool assign_target_ = false;
};

}  // namespace

Node parse_program(const std::string& text) {
    Parser p(text);
    return p.program();
}

}  // namespace relift
