#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "relift/common.hpp"

namespace relift {

// Three instruction classes drive everything downstream: the interpreter's
// dispatch, and the encoder's choice of cell.
enum class IClass : std::uint8_t { Mem, Br, Art };

enum class Opcode : std::uint8_t {
    Lw,
    Sw,
    Beq,
    Bne,
    J,
    Jal,
    LabelDef,
    Li,
    Move,
    Add,
    Sub,
    Mul,
    Div,
    And,
    Or,
    Xor,
    Sll,
    Srl,
    Slt,
    Sle,
    Seq,
    Addi,
};

IClass classify(Opcode op);
const char* mnemonic(Opcode op);
// Returns false when the mnemonic is unknown.
bool opcode_from_mnemonic(const std::string& m, Opcode& out);

// Registers, as dense indices. $0 is hardwired zero; $1..$8 are expression
// temporaries; $v0 carries call results and the return value; $v1 is the
// returned-flag; $fp is the frame base; $a0..$a15 carry the inputs at entry.
constexpr int REG_ZERO = 0;
constexpr int REG_T1 = 1;  // $1..$8 occupy 1..8
constexpr int REG_V0 = 9;
constexpr int REG_V1 = 10;
constexpr int REG_FP = 11;
constexpr int REG_A0 = 12;  // $a0..$a15 occupy 12..27
constexpr int NUM_REGS = 28;

std::string reg_name(int reg);
// Returns -1 when the name is not a register.
int parse_reg(const std::string& name);

struct Operand {
    enum class Kind : std::uint8_t { Reg, Imm, Frame, Label, Name };
    Kind kind = Kind::Imm;
    int reg = 0;            // Reg
    std::int64_t imm = 0;   // Imm, Frame (offset; base is always $fp)
    std::string text;       // Label, Name

    static Operand make_reg(int r) { return {Kind::Reg, r, 0, {}}; }
    static Operand make_imm(std::int64_t v) { return {Kind::Imm, 0, v, {}}; }
    static Operand make_frame(std::int64_t off) { return {Kind::Frame, 0, off, {}}; }
    static Operand make_label(std::string name) { return {Kind::Label, 0, 0, std::move(name)}; }
    static Operand make_name(std::string name) { return {Kind::Name, 0, 0, std::move(name)}; }

    bool operator==(const Operand& o) const = default;
};

struct Instruction {
    Opcode op = Opcode::Li;
    std::vector<Operand> operands;

    bool operator==(const Instruction& o) const = default;

    // Token form: opcode mnemonic then operand tokens, a frame operand
    // contributing its offset and "$fp". A label definition is the single
    // token "name:".
    std::vector<std::string> tokens() const;
    std::string render() const;
};

// Expected operand kinds per opcode; the single authority for parsing,
// rendering, validation, and token grouping.
const std::vector<Operand::Kind>& operand_signature(Opcode op);

struct AsmProgram {
    std::string entry;                   // entry label name, e.g. "func"
    std::vector<Instruction> code;       // includes label definitions
    std::map<std::string, int> labels;   // label name -> instruction index

    void rebuild_labels();               // throws ParseError on duplicates
    std::vector<std::string> tokens() const;
    std::string render() const;
};

// Flattens assembly text into the canonical token stream: comments ('#' to end
// of line), assembler directives (tokens starting with '.'), "nop", commas,
// and brackets are dropped; everything before the entry label is skipped.
// Throws ParseError when the entry label never appears.
std::vector<std::string> tokenize_asm(const std::string& text, const std::string& entry = "func");

// Groups a canonical token stream back into instructions using the signature
// table. The first token must be the entry label definition.
AsmProgram parse_asm_tokens(const std::vector<std::string>& tokens);
AsmProgram parse_asm(const std::string& text, const std::string& entry = "func");

}  // namespace relift
