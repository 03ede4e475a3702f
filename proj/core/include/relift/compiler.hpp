#pragma once

#include "relift/ast.hpp"
#include "relift/isa.hpp"

namespace relift {

// Lowers a program tree to assembly. Deterministic: the same tree always
// yields the same instruction sequence.
//
// Layout: entry label, one `sw $aK, off($fp)` per parameter (variable vK
// lives at frame offset 4+4K), the body, then the exit label $B0. A return
// statement moves its value to $v0, sets $v1 to 1, and jumps to $B0.
// Expressions evaluate left-to-right through the temporary stack $1..$8.
// Conditions materialize a value and branch to the exit of the construct
// with `beq $r, $0, label`.
//
// Throws CompileError (carrying the offending statement's LCRS path) on
// arity violations, continue outside a loop, temp exhaustion, and tokens
// that the grammar does not allow in the given position.
AsmProgram compile(const Node& program);

}  // namespace relift
