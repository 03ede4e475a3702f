#pragma once

#include <cstdint>
#include <vector>

#include "relift/isa.hpp"

namespace relift {

struct ExecLimits {
    long max_steps = 100000;
};

// Result of one run. When the program executed a return statement, outputs is
// the single returned value; otherwise it is every written frame slot in
// ascending offset order (for generator programs: the final variable values).
struct ExecResult {
    std::vector<std::int64_t> outputs;
    std::vector<std::string> trace;  // callback names in invocation order
    bool returned = false;
    long steps = 0;
    std::vector<std::string> warnings;  // div-by-zero, math overflow (capped)
};

// Runs a program. Registers start at zero except $a0..$a15, which hold
// inputs[0..15]. Callback calls consume successive values from the same
// inputs list (a shared tape; exhausted reads yield 0) and are appended to the
// trace. Math calls are evaluated by the deterministic reference table.
// Throws ExecError on step budget exhaustion, loads from never-written frame
// slots, unknown labels, or unknown call targets.
ExecResult execute(const AsmProgram& prog, const std::vector<std::int64_t>& inputs,
                   const ExecLimits& limits = {});

}  // namespace relift
