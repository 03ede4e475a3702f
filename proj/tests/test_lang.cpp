#include "doctest.h"

#include "relift/ast.hpp"
#include "relift/lang_text.hpp"
#include "relift/rng.hpp"
#include "relift/vocab.hpp"

using namespace relift;

namespace {

Node v(const char* name) { return node(tok(TokenKind::Var, name)); }
Node lit(const char* d) { return node(tok(TokenKind::IntLit, d)); }
Node op(const char* o, Node a, Node b) {
    return node(tok(TokenKind::BinOp, o), {std::move(a), std::move(b)});
}
Node assign(Node target, Node value) {
    return node(tok(TokenKind::Assign, "="), {std::move(target), std::move(value)});
}
Node param(const char* ty, const char* name) {
    return node(tok(TokenKind::Param, "param"),
                {node(tok(ty[0] == 'i' ? TokenKind::TypeInt : TokenKind::TypeDouble, ty)), v(name)});
}

Node small_func(std::vector<Node> body) {
    Node f = node(tok(TokenKind::FuncDef, "func"), {param("int", "v1"), param("int", "v2")});
    for (auto& s : body) f.children.push_back(std::move(s));
    return f;
}

// Random expression/statement builder scoped to this file; the real dataset
// generator has its own module and tests.
Node rand_expr(Rng& rng, int depth) {
    if (depth == 0 || rng.chance(0.4)) {
        if (rng.chance(0.5)) return v(rng.pick(HlVocab::var_names()).c_str());
        return lit(rng.pick(HlVocab::digit_names()).c_str());
    }
    return node(tok(TokenKind::BinOp, rng.pick(HlVocab::op_names())),
                {rand_expr(rng, depth - 1), rand_expr(rng, depth - 1)});
}

Node rand_stmt(Rng& rng, int nest) {
    double r = rng.uniform();
    if (nest > 0 && r < 0.2) {
        Node s = node(tok(r < 0.1 ? TokenKind::While : TokenKind::If, r < 0.1 ? "while" : "if"),
                      {rand_expr(rng, 2)});
        int n = static_cast<int>(rng.range(1, 3));
        for (int i = 0; i < n; ++i) s.children.push_back(rand_stmt(rng, nest - 1));
        return s;
    }
    if (r < 0.3) return node(tok(TokenKind::Return, "return"), {rand_expr(rng, 1)});
    return assign(v(rng.pick(HlVocab::var_names()).c_str()), rand_expr(rng, 2));
}

Node rand_program(Rng& rng) {
    Node f = node(tok(TokenKind::FuncDef, "func"));
    int np = static_cast<int>(rng.range(1, 4));
    for (int i = 0; i < np; ++i)
        f.children.push_back(param(rng.chance(0.5) ? "int" : "double",
                                   HlVocab::var_names()[static_cast<size_t>(i)].c_str()));
    int ns = static_cast<int>(rng.range(1, 6));
    for (int i = 0; i < ns; ++i) f.children.push_back(rand_stmt(rng, 2));
    return f;
}

}  // namespace

TEST_CASE("vocabulary is a bijection with a stable fingerprint") {
    const HlVocab& voc = HlVocab::instance();
    CHECK(voc.size() == 89);
    for (int i = 0; i < voc.size(); ++i) CHECK(voc.id_of(voc.token_of(i)) == i);
    CHECK(voc.token_of(voc.none_id()).kind == TokenKind::None);
    CHECK(voc.hash() == HlVocab::instance().hash());
    CHECK(voc.classify("v3")->kind == TokenKind::Var);
    CHECK(voc.classify("while")->kind == TokenKind::While);
    CHECK(voc.classify("log")->kind == TokenKind::Call);
    CHECK(voc.classify("leftIsClear")->kind == TokenKind::CallbackName);
    CHECK(!voc.classify("bogus"));
    CHECK(HlVocab::call_arity("sin") == 1);
    CHECK(HlVocab::call_arity("pow") == 2);
    CHECK(HlVocab::call_arity("Move") == 0);
    CHECK(HlVocab::call_arity("nope") == -1);
}

TEST_CASE("lcrs round trip on a handwritten tree") {
    Node f = small_func({});
    f.children.push_back(assign(v("v1"), op("*", v("v2"), lit("3"))));
    auto bin = to_lcrs(f);
    CHECK(bin->value.lexeme == "func");
    CHECK(bin->left->value.kind == TokenKind::Param);
    CHECK(bin->left->right->value.kind == TokenKind::Param);
    CHECK(bin->left->right->right->value.kind == TokenKind::Assign);
    CHECK(!bin->right);
    Node back = from_lcrs(*bin);
    CHECK(back == f);
    CHECK(preorder_tokens(f) == preorder_tokens(*bin));
}

TEST_CASE("lcrs round trip over random trees") {
    Rng rng(derive_seed(1234, "lcrs-roundtrip"));
    for (int i = 0; i < 200; ++i) {
        Node p = rand_program(rng);
        Node back = from_lcrs(*to_lcrs(p));
        REQUIRE(back == p);
        REQUIRE(tree_hash(back) == tree_hash(p));
    }
}

TEST_CASE("from_lcrs rejects terminal tokens with a left child") {
    auto bad = make_bin(tok(TokenKind::Var, "v1"));
    bad->left = make_bin(tok(TokenKind::IntLit, "3"));
    CHECK_THROWS_AS(from_lcrs(*bad), ShapeError);

    auto root = make_bin(tok(TokenKind::FuncDef, "func"));
    root->right = make_bin(tok(TokenKind::Var, "v1"));
    CHECK_THROWS_AS(from_lcrs(*root), ShapeError);
}

TEST_CASE("print and parse invert each other") {
    Node f = small_func({});
    f.children.push_back(assign(v("v1"), op("*", op("+", v("v1"), v("v2")), lit("4"))));
    Node w = node(tok(TokenKind::While, "while"), {op("<", v("v1"), lit("9"))});
    w.children.push_back(assign(v("v1"), op("+", v("v1"), lit("1"))));
    w.children.push_back(node(tok(TokenKind::Continue, "continue")));
    f.children.push_back(std::move(w));
    f.children.push_back(node(tok(TokenKind::Return, "return"), {v("v1")}));

    std::string text = pretty_print(f);
    CHECK(text.find("v1=(v1+v2)*4;") != std::string::npos);
    CHECK(text.find("while(v1<9){") != std::string::npos);
    Node back = parse_program(text);
    CHECK(back == f);
}

TEST_CASE("print respects precedence without redundant parens") {
    // (a*b)-c+d parses left-assoc as ((a*b)-c)+d; printing drops all parens.
    Node e = op("+", op("-", op("*", v("v1"), v("v2")), v("v3")), v("v4"));
    CHECK(print_expr(e) == "v1*v2-v3+v4");
    // a-(b+c) keeps the parens on the right operand.
    Node e2 = op("-", v("v1"), op("+", v("v2"), v("v3")));
    CHECK(print_expr(e2) == "v1-(v2+v3)");
    Node e3 = op("<<", v("v1"), op("||", v("v2"), v("v3")));
    CHECK(print_expr(e3) == "v1<<(v2||v3)");
}

TEST_CASE("print and parse round trip over random trees") {
    Rng rng(derive_seed(99, "text-roundtrip"));
    for (int i = 0; i < 300; ++i) {
        Node p = rand_program(rng);
        std::string text = pretty_print(p);
        Node back = parse_program(text);
        REQUIRE(back == p);
        REQUIRE(pretty_print(back) == text);
    }
}

TEST_CASE("parser reports positions and rejects out-of-grammar input") {
    CHECK_THROWS_AS(parse_program("int func(){ v1=23; }"), ParseError);
    CHECK_THROWS_AS(parse_program("int func(){ v1=v2+; }"), ParseError);
    CHECK_THROWS_AS(parse_program("int bogus(){ }"), ParseError);
    CHECK_THROWS_AS(parse_program("int func(){ v1=unknownfn(v2); }"), ParseError);
    CHECK_THROWS_AS(parse_program("int func(int v1){ return v1; } trailing"), ParseError);
    try {
        parse_program("int func(){\n  v1=34;\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("karel style programs print and parse") {
    Node f = node(tok(TokenKind::FuncDef, "main"));
    Node w = node(tok(TokenKind::While, "while"),
                  {node(tok(TokenKind::CallbackName, "frontIsClear"))});
    w.children.push_back(node(tok(TokenKind::Call, "Move")));
    Node br = node(tok(TokenKind::If, "if"),
                   {node(tok(TokenKind::CallbackName, "beepersPresent"))});
    br.children.push_back(node(tok(TokenKind::Call, "PickBeeper")));
    br.children.push_back(node(tok(TokenKind::Continue, "continue")));
    w.children.push_back(std::move(br));
    f.children.push_back(std::move(w));
    std::string text = pretty_print(f);
    CHECK(text.find("int main(){") == 0);
    CHECK(text.find("while(frontIsClear){") != std::string::npos);
    CHECK(text.find("Move();") != std::string::npos);
    CHECK(parse_program(text) == f);
}

TEST_CASE("statement depth audit") {
    Node f = small_func({});
    f.children.push_back(assign(v("v1"), v("v2")));  // depth 1
    CHECK(max_statement_depth(f) == 1);
    f.children.push_back(assign(v("v1"), op("+", op("*", v("v1"), v("v2")), lit("2"))));
    CHECK(max_statement_depth(f) == 3);
    Node w = node(tok(TokenKind::While, "while"), {op("<", v("v1"), lit("9"))});
    w.children.push_back(node(tok(TokenKind::Continue, "continue")));
    f.children.push_back(std::move(w));
    CHECK(max_statement_depth(f) == 3);  // condition depth 2 plus header edge
}

TEST_CASE("none tokens are detected") {
    Node f = small_func({});
    CHECK(none_free(f));
    f.children.push_back(node(tok(TokenKind::None, "none")));
    CHECK(!none_free(f));
}

TEST_CASE("lcrs paths resolve through the n-ary tree") {
    Node f = small_func({});
    f.children.push_back(assign(v("v1"), op("*", v("v2"), lit("3"))));
    // Root "" -> func; "L" -> first param; "LRR" -> assign; "LRRL" -> v1;
    // "LRRLR" -> the * node; "LRRLRL" -> v2.
    CHECK(resolve_lcrs_path(f, "").node->tok.kind == TokenKind::FuncDef);
    CHECK(resolve_lcrs_path(f, "L").node->tok.kind == TokenKind::Param);
    CHECK(resolve_lcrs_path(f, "LRR").node->tok.kind == TokenKind::Assign);
    CHECK(resolve_lcrs_path(f, "LRRL").node->tok.lexeme == "v1");
    CHECK(resolve_lcrs_path(f, "LRRLR").node->tok.lexeme == "*");
    CHECK(resolve_lcrs_path(f, "LRRLRL").node->tok.lexeme == "v2");
    CHECK(resolve_lcrs_path(f, "LRRLRLL").node == nullptr);   // v2 has no children
    CHECK(resolve_lcrs_path(f, "R").node == nullptr);         // root has no sibling
    CHECK(lcrs_child_path("", 2) == "LRR");
    CHECK(lcrs_child_path("LRR", 0) == "LRRL");

    NodeRef ref = resolve_lcrs_path(f, "LRR");
    CHECK(ref.parent == &f);
    CHECK(ref.index == 2);
}
