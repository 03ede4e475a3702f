#include "relift/interp.hpp"

#include <array>
#include <map>

#include "relift/refmath.hpp"
#include "relift/vocab.hpp"

namespace relift {

namespace {

std::int64_t as_i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }
std::uint64_t as_u64(std::int64_t v) { return static_cast<std::uint64_t>(v); }

}  // namespace

ExecResult execute(const AsmProgram& prog, const std::vector<std::int64_t>& inputs,
                   const ExecLimits& limits) {
    std::array<std::int64_t, NUM_REGS> regs{};
    for (size_t k = 0; k < inputs.size() && k < 16; ++k) regs[REG_A0 + k] = inputs[k];

    std::map<std::int64_t, std::int64_t> frame;
    ExecResult res;
    size_t tape_pos = 0;

    auto warn = [&](const char* msg) {
        if (res.warnings.size() < 16) res.warnings.emplace_back(msg);
    };

    auto it = prog.labels.find(prog.entry);
    if (it == prog.labels.end())
        throw ExecError("execute: entry label '" + prog.entry + "' not found");
    size_t pc = static_cast<size_t>(it->second);

    auto jump_to = [&](const std::string& label) {
        auto jt = prog.labels.find(label);
        if (jt == prog.labels.end()) throw ExecError("execute: unknown label '" + label + "'");
        pc = static_cast<size_t>(jt->second);
    };

    while (pc < prog.code.size()) {
        if (++res.steps > limits.max_steps)
            throw ExecError("execute: step budget exceeded (" + std::to_string(limits.max_steps) +
                            " steps)");
        const Instruction& in = prog.code[pc];
        const auto& ops = in.operands;
        auto rd = [&]() -> std::int64_t& { return regs[ops[0].reg]; };
        auto rs = [&](size_t i) { return regs[ops[i].reg]; };
        ++pc;
        switch (in.op) {
            case Opcode::LabelDef:
                break;
            case Opcode::Lw: {
                auto ft = frame.find(ops[1].imm);
                if (ft == frame.end())
                    throw ExecError("execute: load from never-written frame slot " +
                                    std::to_string(ops[1].imm) + "($fp)");
                rd() = ft->second;
                break;
            }
            case Opcode::Sw:
                frame[ops[1].imm] = rs(0);
                break;
            case Opcode::Beq:
                if (rs(0) == rs(1)) jump_to(ops[2].text);
                break;
            case Opcode::Bne:
                if (rs(0) != rs(1)) jump_to(ops[2].text);
                break;
            case Opcode::J:
                jump_to(ops[0].text);
                break;
            case Opcode::Jal: {
                const std::string& name = ops[0].text;
                if (ref_math_known(name)) {
                    bool ovf = false;
                    regs[REG_V0] = ref_math(name, regs[REG_A0], regs[REG_A0 + 1], &ovf);
                    if (ovf) warn("math result out of range, substituted 0");
                } else if (HlVocab::is_karel_action(name) || HlVocab::is_karel_flag(name)) {
                    res.trace.push_back(name);
                    regs[REG_V0] = tape_pos < inputs.size() ? inputs[tape_pos++] : 0;
                } else {
                    throw ExecError("execute: unknown call target '" + name + "'");
                }
                break;
            }
            case Opcode::Li:
                rd() = ops[1].imm;
                break;
            case Opcode::Move:
                rd() = rs(1);
                break;
            case Opcode::Add:
                rd() = as_i64(as_u64(rs(1)) + as_u64(rs(2)));
                break;
            case Opcode::Sub:
                rd() = as_i64(as_u64(rs(1)) - as_u64(rs(2)));
                break;
            case Opcode::Mul:
                rd() = as_i64(as_u64(rs(1)) * as_u64(rs(2)));
                break;
            case Opcode::Div: {
                std::int64_t a = rs(1), b = rs(2);
                if (b == 0) {
                    warn("division by zero, substituted 0");
                    rd() = 0;
                } else if (a == INT64_MIN && b == -1) {
                    rd() = INT64_MIN;  // wraps, like the other arithmetic
                } else {
                    rd() = a / b;
                }
                break;
            }
            case Opcode::And:
                rd() = rs(1) & rs(2);
                break;
            case Opcode::Or:
                rd() = rs(1) | rs(2);
                break;
            case Opcode::Xor:
                rd() = rs(1) ^ rs(2);
                break;
            case Opcode::Sll:
                rd() = as_i64(as_u64(rs(1)) << (as_u64(rs(2)) & 63));
                break;
            case Opcode::Srl:
                rd() = as_i64(as_u64(rs(1)) >> (as_u64(rs(2)) & 63));
                break;
            case Opcode::Slt:
                rd() = rs(1) < rs(2) ? 1 : 0;
                break;
            case Opcode::Sle:
                rd() = rs(1) <= rs(2) ? 1 : 0;
                break;
            case Opcode::Seq:
                rd() = rs(1) == rs(2) ? 1 : 0;
                break;
            case Opcode::Addi:
                rd() = as_i64(as_u64(rs(1)) + as_u64(ops[2].imm));
                break;
        }
        regs[REG_ZERO] = 0;  // $0 stays hardwired
    }

    res.returned = regs[REG_V1] == 1;
    if (res.returned) {
        res.outputs.push_back(regs[REG_V0]);
    } else {
        for (const auto& [off, val] : frame) res.outputs.push_back(val);
    }
    return res;
}

}  // namespace relift
