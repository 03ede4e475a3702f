#pragma once

#include <cstdint>
#include <string>

namespace relift {

// Software reference for the math call table. Built only from IEEE basic
// operations (+, -, *, /, sqrt) with fixed iteration counts, so results are
// bit-identical on any IEEE-754 platform. Inputs and outputs are 64-bit
// integers; the result is the double value truncated toward zero, with
// non-finite or out-of-range values mapped to 0 and *overflow set.
std::int64_t ref_math(const std::string& name, std::int64_t a, std::int64_t b, bool* overflow);

// True when the name is in the math call table.
bool ref_math_known(const std::string& name);

}  // namespace relift
