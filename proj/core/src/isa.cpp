#include "relift/isa.hpp"

#include <array>
#include <cctype>

#include "relift/vocab.hpp"

namespace relift {

namespace {

struct OpInfo {
    Opcode op;
    const char* mnemonic;
    IClass iclass;
    std::vector<Operand::Kind> sig;
};

using K = Operand::Kind;

const std::vector<OpInfo>& op_table() {
    static const std::vector<OpInfo> t = {
        {Opcode::Lw, "lw", IClass::Mem, {K::Reg, K::Frame}},
        {Opcode::Sw, "sw", IClass::Mem, {K::Reg, K::Frame}},
        {Opcode::Beq, "beq", IClass::Br, {K::Reg, K::Reg, K::Label}},
        {Opcode::Bne, "bne", IClass::Br, {K::Reg, K::Reg, K::Label}},
        {Opcode::J, "j", IClass::Br, {K::Label}},
        {Opcode::Jal, "jal", IClass::Br, {K::Name}},
        {Opcode::LabelDef, "label", IClass::Br, {K::Label}},
        {Opcode::Li, "li", IClass::Art, {K::Reg, K::Imm}},
        {Opcode::Move, "move", IClass::Art, {K::Reg, K::Reg}},
        {Opcode::Add, "add", IClass::Art, {K::Reg, K::Reg, K::Reg}},
        {Opcode::Sub, "sub", IClass::Art, {K::Reg, K::Reg, K::Reg}},
        {Opcode::Mul, "mul", IClass::Art, {K::Reg, K::Reg, K::Reg}},
        {Opcode::Div, "div", IClass::Art, {K::Reg, K::Reg, K::Reg}},
        {Opcode::And, "and", IClass::Art, {K::Reg, K::Reg, K::Reg}},
        {Opcode::Or, "or", IClass::Art, {K::Reg, K::Reg, K::Reg}},
        {Opcode::Xor, "xor", IClass::Art, {K::Reg, K::Reg, K::Reg}},
        {Opcode::Sll, "sll", IClass::Art, {K::Reg, K::Reg, K::Reg}},
        {Opcode::Srl, "srl", IClass::Art, {K::Reg, K::Reg, K::Reg}},
        {Opcode::Slt, "slt", IClass::Art, {K::Reg, K::Reg, K::Reg}},
        {Opcode::Sle, "sle", IClass::Art, {K::Reg, K::Reg, K::Reg}},
        {Opcode::Seq, "seq", IClass::Art, {K::Reg, K::Reg, K::Reg}},
        {Opcode::Addi, "addi", IClass::Art, {K::Reg, K::Reg, K::Imm}},
    };
    return t;
}

const OpInfo& info(Opcode op) { return op_table()[static_cast<size_t>(op)]; }

}  // namespace

IClass classify(Opcode op) { return info(op).iclass; }

const char* mnemonic(Opcode op) { return info(op).mnemonic; }

bool opcode_from_mnemonic(const std::string& m, Opcode& out) {
    for (const auto& e : op_table()) {
        if (m == e.mnemonic) {
            out = e.op;
            return true;
        }
    }
    return false;
}

const std::vector<Operand::Kind>& operand_signature(Opcode op) { return info(op).sig; }

std::string reg_name(int reg) {
    if (reg == REG_ZERO) return "$0";
    if (reg >= REG_T1 && reg <= 8) return "$" + std::to_string(reg);
    if (reg == REG_V0) return "$v0";
    if (reg == REG_V1) return "$v1";
    if (reg == REG_FP) return "$fp";
    if (reg >= REG_A0 && reg < NUM_REGS) return "$a" + std::to_string(reg - REG_A0);
    throw Error("reg_name: bad register index " + std::to_string(reg));
}

int parse_reg(const std::string& name) {
    if (name.size() < 2 || name[0] != '$') return -1;
    std::string body = name.substr(1);
    if (body == "v0") return REG_V0;
    if (body == "v1") return REG_V1;
    if (body == "fp") return REG_FP;
    if (body[0] == 'a') {
        int n = -1;
        try {
            size_t used = 0;
            n = std::stoi(body.substr(1), &used);
            if (used != body.size() - 1) return -1;
        } catch (...) {
            return -1;
        }
        return n >= 0 && n < 16 ? REG_A0 + n : -1;
    }
    try {
        size_t used = 0;
        int n = std::stoi(body, &used);
        if (used != body.size()) return -1;
        return n >= 0 && n <= 8 ? n : -1;
    } catch (...) {
        return -1;
    }
}

std::vector<std::string> Instruction::tokens() const {
    if (op == Opcode::LabelDef) return {operands.at(0).text + ":"};
    std::vector<std::string> out = {mnemonic(op)};
    for (const Operand& o : operands) {
        switch (o.kind) {
            case Operand::Kind::Reg: out.push_back(reg_name(o.reg)); break;
            case Operand::Kind::Imm: out.push_back(std::to_string(o.imm)); break;
            case Operand::Kind::Frame:
                out.push_back(std::to_string(o.imm));
                out.push_back("$fp");
                break;
            case Operand::Kind::Label:
            case Operand::Kind::Name: out.push_back(o.text); break;
        }
    }
    return out;
}

std::string Instruction::render() const {
    if (op == Opcode::LabelDef) return operands.at(0).text + ":";
    std::string out = "  ";
    out += mnemonic(op);
    for (size_t i = 0; i < operands.size(); ++i) {
        out += i == 0 ? " " : ", ";
        const Operand& o = operands[i];
        switch (o.kind) {
            case Operand::Kind::Reg: out += reg_name(o.reg); break;
            case Operand::Kind::Imm: out += std::to_string(o.imm); break;
            case Operand::Kind::Frame:
                out += std::to_string(o.imm) + "($fp)";
                break;
            case Operand::Kind::Label:
            case Operand::Kind::Name: out += o.text; break;
        }
    }
    return out;
}

void AsmProgram::rebuild_labels() {
    labels.clear();
    for (size_t i = 0; i < code.size(); ++i) {
        if (code[i].op != Opcode::LabelDef) continue;
        const std::string& name = code[i].operands.at(0).text;
        if (!labels.emplace(name, static_cast<int>(i)).second)
            throw ParseError("duplicate label '" + name + "'");
    }
}

std::vector<std::string> AsmProgram::tokens() const {
    std::vector<std::string> out;
    for (const Instruction& in : code) {
        auto t = in.tokens();
        out.insert(out.end(), t.begin(), t.end());
    }
    return out;
}

std::string AsmProgram::render() const {
    std::string out;
    for (const Instruction& in : code) {
        out += in.render();
        out += '\n';
    }
    return out;
}

std::vector<std::string> tokenize_asm(const std::string& text, const std::string& entry) {
    std::vector<std::string> raw;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            raw.push_back(cur);
            cur.clear();
        }
    };
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '#') {
            flush();
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '(' ||
                   c == ')' || c == '[' || c == ']') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();

    std::vector<std::string> out;
    const std::string entry_def = entry + ":";
    bool started = false;
    for (auto& t : raw) {
        if (!started) {
            if (t == entry_def) started = true;
            else continue;
        }
        if (t.empty() || t[0] == '.' || t == "nop") continue;
        out.push_back(std::move(t));
    }
    if (!started)
        throw ParseError("tokenize: entry label '" + entry_def + "' not found");
    return out;
}

AsmProgram parse_asm_tokens(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw ParseError("parse_asm: empty token stream");
    if (tokens[0].empty() || tokens[0].back() != ':')
        throw ParseError("parse_asm: stream must start with the entry label, got '" + tokens[0] +
                         "'");
    AsmProgram prog;
    prog.entry = tokens[0].substr(0, tokens[0].size() - 1);
    size_t i = 0;
    while (i < tokens.size()) {
        const std::string& t = tokens[i];
        if (!t.empty() && t.back() == ':') {
            prog.code.push_back(
                {Opcode::LabelDef, {Operand::make_label(t.substr(0, t.size() - 1))}});
            ++i;
            continue;
        }
        Opcode op;
        if (!opcode_from_mnemonic(t, op))
            throw ParseError("parse_asm: unknown mnemonic '" + t + "' at token " +
                             std::to_string(i));
        Instruction in{op, {}};
        ++i;
        for (Operand::Kind k : operand_signature(op)) {
            auto need = [&](size_t n) {
                if (i + n > tokens.size())
                    throw ParseError(std::string("parse_asm: truncated operands for '") +
                                     mnemonic(op) + "'");
            };
            switch (k) {
                case Operand::Kind::Reg: {
                    need(1);
                    int r = parse_reg(tokens[i]);
                    if (r < 0)
                        throw ParseError("parse_asm: bad register '" + tokens[i] + "' for '" +
                                         mnemonic(op) + "'");
                    in.operands.push_back(Operand::make_reg(r));
                    ++i;
                    break;
                }
                case Operand::Kind::Imm: {
                    need(1);
                    try {
                        size_t used = 0;
                        std::int64_t v = std::stoll(tokens[i], &used);
                        if (used != tokens[i].size()) throw std::invalid_argument("");
                        in.operands.push_back(Operand::make_imm(v));
                    } catch (...) {
                        throw ParseError("parse_asm: bad immediate '" + tokens[i] + "' for '" +
                                         mnemonic(op) + "'");
                    }
                    ++i;
                    break;
                }
                case Operand::Kind::Frame: {
                    need(2);
                    std::int64_t off = 0;
                    try {
                        size_t used = 0;
                        off = std::stoll(tokens[i], &used);
                        if (used != tokens[i].size()) throw std::invalid_argument("");
                    } catch (...) {
                        throw ParseError("parse_asm: bad frame offset '" + tokens[i] + "'");
                    }
                    if (tokens[i + 1] != "$fp")
                        throw ParseError("parse_asm: frame operand must use $fp, got '" +
                                         tokens[i + 1] + "'");
                    in.operands.push_back(Operand::make_frame(off));
                    i += 2;
                    break;
                }
                case Operand::Kind::Label: {
                    need(1);
                    in.operands.push_back(Operand::make_label(tokens[i]));
                    ++i;
                    break;
                }
                case Operand::Kind::Name: {
                    need(1);
                    in.operands.push_back(Operand::make_name(tokens[i]));
                    ++i;
                    break;
                }
            }
        }
        prog.code.push_back(std::move(in));
    }
    prog.rebuild_labels();
    if (!prog.labels.count(prog.entry))
        throw ParseError("parse_asm: entry label '" + prog.entry + "' missing");
    return prog;
}

AsmProgram parse_asm(const std::string& text, const std::string& entry) {
    return parse_asm_tokens(tokenize_asm(text, entry));
}

}  // namespace relift
