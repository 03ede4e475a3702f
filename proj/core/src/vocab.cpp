#include "relift/vocab.hpp"

namespace relift {

const std::vector<std::string>& HlVocab::var_names() {
    static const std::vector<std::string> v = [] {
        std::vector<std::string> out;
        for (int i = 1; i <= 16; ++i) out.push_back("v" + std::to_string(i));
        return out;
    }();
    return v;
}

const std::vector<std::string>& HlVocab::digit_names() {
    static const std::vector<std::string> v = [] {
        std::vector<std::string> out;
        for (int i = 0; i <= 9; ++i) out.push_back(std::to_string(i));
        return out;
    }();
    return v;
}

const std::vector<std::string>& HlVocab::op_names() {
    static const std::vector<std::string> v = {"+",  "-",  "*", "/",  "<<", ">>", "&",  "|",
                                               "^",  "==", "<", "<=", ">",  ">=", "||", "&&"};
    return v;
}

const std::vector<std::string>& HlVocab::math_names() {
    // 12 unary then 8 binary names.
    static const std::vector<std::string> v = {
        "sin",  "cos",   "tan",  "asin", "acos",      "atan",           "exp",     "log",
        "sqrt", "ceil",  "floor", "fabs",
        "atan2", "pow",  "fmin", "fmax", "isgreater", "isgreaterequal", "isless",  "islessequal"};
    return v;
}

const std::vector<std::string>& HlVocab::karel_actions() {
    static const std::vector<std::string> v = {"Move",       "TurnLeft", "TurnRight", "PutBeeper",
                                               "PickBeeper", "TurnOn",   "TurnOff",   "Beep"};
    return v;
}

const std::vector<std::string>& HlVocab::karel_flags() {
    static const std::vector<std::string> v = {"frontIsClear",   "leftIsClear",
                                               "rightIsClear",   "facingNorth",
                                               "notFacingNorth", "beepersPresent",
                                               "noBeepersPresent", "frontIsBlocked"};
    return v;
}

int HlVocab::call_arity(const std::string& name) {
    const auto& m = math_names();
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] == name) return i < 12 ? 1 : 2;
    if (is_karel_action(name)) return 0;
    return -1;
}

bool HlVocab::is_math_name(const std::string& name) {
    for (const auto& n : math_names())
        if (n == name) return true;
    return false;
}

bool HlVocab::is_karel_action(const std::string& name) {
    for (const auto& n : karel_actions())
        if (n == name) return true;
    return false;
}

bool HlVocab::is_karel_flag(const std::string& name) {
    for (const auto& n : karel_flags())
        if (n == name) return true;
    return false;
}

bool HlVocab::is_known_call_target(const std::string& name) {
    return is_math_name(name) || is_karel_action(name) || is_karel_flag(name);
}

HlVocab::HlVocab() {
    auto add = [&](TokenKind k, const std::string& lex) {
        by_lexeme_.emplace(lex, static_cast<int>(tokens_.size()));
        tokens_.push_back(Token{k, lex});
    };

    add(TokenKind::None, "none");
    none_id_ = 0;
    add(TokenKind::FuncDef, "func");
    add(TokenKind::FuncDef, "main");
    add(TokenKind::Param, "param");
    add(TokenKind::Assign, "=");
    add(TokenKind::While, "while");
    add(TokenKind::If, "if");
    add(TokenKind::Continue, "continue");
    add(TokenKind::Return, "return");
    add(TokenKind::TypeInt, "int");
    add(TokenKind::TypeDouble, "double");
    for (const auto& s : op_names()) add(TokenKind::BinOp, s);
    for (const auto& s : var_names()) add(TokenKind::Var, s);
    for (const auto& s : digit_names()) add(TokenKind::IntLit, s);
    for (const auto& s : math_names()) add(TokenKind::Call, s);
    for (const auto& s : karel_actions()) add(TokenKind::Call, s);
    for (const auto& s : karel_flags()) add(TokenKind::CallbackName, s);

    std::vector<std::string> manifest;
    for (const auto& t : tokens_) manifest.push_back(std::string(kind_name(t.kind)) + ":" + t.lexeme);
    hash_ = fnv1a_list(manifest);
}

const HlVocab& HlVocab::instance() {
    static const HlVocab v;
    return v;
}

int HlVocab::id_of(const Token& t) const {
    auto it = by_lexeme_.find(t.lexeme);
    if (it == by_lexeme_.end() || !(tokens_[it->second].kind == t.kind))
        throw DataError("HlVocab: unknown token '" + t.lexeme + "' (" + kind_name(t.kind) + ")");
    return it->second;
}

const Token& HlVocab::token_of(int id) const {
    if (id < 0 || id >= size()) throw DataError("HlVocab: id out of range: " + std::to_string(id));
    return tokens_[id];
}

bool HlVocab::contains(const Token& t) const {
    auto it = by_lexeme_.find(t.lexeme);
    return it != by_lexeme_.end() && tokens_[it->second].kind == t.kind;
}

std::optional<Token> HlVocab::classify(const std::string& lexeme) const {
    auto it = by_lexeme_.find(lexeme);
    if (it == by_lexeme_.end()) return std::nullopt;
    return tokens_[it->second];
}

}  // namespace relift
