#include "doctest.h"

#include "relift/compiler.hpp"
#include "relift/interp.hpp"
#include "relift/lang_text.hpp"
#include "relift/refmath.hpp"
#include "support/hl_eval.hpp"

using namespace relift;
using relift::testsupport::hl_eval;

TEST_CASE("return value becomes the single output") {
    auto prog = compile(parse_program("int func(int v1){ return v1; }"));
    auto res = execute(prog, {7});
    CHECK(res.returned);
    CHECK(res.outputs == std::vector<std::int64_t>{7});
}

TEST_CASE("assignment flows through the frame") {
    auto prog = compile(parse_program("int func(int v1, int v2, int v3){ v1=v2+v3; return v1; }"));
    auto res = execute(prog, {0, 2, 3});
    CHECK(res.outputs == std::vector<std::int64_t>{5});
}

TEST_CASE("without a return, outputs are the final variable values in order") {
    auto prog = compile(parse_program("int func(int v1, int v2){ v1=v2*2; v2=v1+1; }"));
    auto res = execute(prog, {10, 4});
    CHECK(!res.returned);
    CHECK(res.outputs == std::vector<std::int64_t>{8, 9});
}

TEST_CASE("division by zero yields zero and a warning") {
    auto prog = compile(parse_program("int func(int v1, int v2){ return v1/v2; }"));
    auto res = execute(prog, {5, 0});
    CHECK(res.outputs == std::vector<std::int64_t>{0});
    REQUIRE(!res.warnings.empty());
    CHECK(res.warnings[0].find("division by zero") != std::string::npos);
}

TEST_CASE("shift amounts are masked to six bits") {
    auto prog = compile(parse_program("int func(int v1, int v2){ return v1<<v2; }"));
    CHECK(execute(prog, {1, 64}).outputs[0] == 1);   // 64 & 63 == 0
    CHECK(execute(prog, {1, 65}).outputs[0] == 2);
    auto prog2 = compile(parse_program("int func(int v1, int v2){ return v1>>v2; }"));
    CHECK(execute(prog2, {-8, 1}).outputs[0] == 9223372036854775804LL);  // logical shift
}

TEST_CASE("arithmetic wraps in two's complement") {
    auto prog = compile(parse_program("int func(int v1, int v2){ return v1*v2; }"));
    CHECK(execute(prog, {INT64_MAX, 2}).outputs[0] == -2);
}

TEST_CASE("step budget exhaustion raises") {
    auto prog = compile(parse_program("int func(int v1){ while(1){ v1=v1+1; } }"));
    CHECK_THROWS_AS(execute(prog, {0}), ExecError);
    CHECK_THROWS_AS(execute(prog, {0}, {1000}), ExecError);
}

TEST_CASE("loads from never-written slots raise") {
    auto prog = compile(parse_program("int func(int v1){ v1=v2; }"));  // v2 never stored
    CHECK_THROWS_AS(execute(prog, {1}), ExecError);
}

TEST_CASE("karel callbacks consume the tape and appear in the trace") {
    auto prog = compile(parse_program(
        "int main(){ while(frontIsClear){ Move(); } TurnOff(); }"));
    // Tape: flag reads and the action reads interleave in invocation order:
    // frontIsClear->1, Move->0, frontIsClear->1, Move->0, frontIsClear->0, TurnOff->...
    auto res = execute(prog, {1, 0, 1, 0, 0});
    CHECK(res.trace == std::vector<std::string>{"frontIsClear", "Move", "frontIsClear", "Move",
                                                "frontIsClear", "TurnOff"});
    CHECK(!res.returned);
    CHECK(res.outputs.empty());  // no frame writes: no params, no assignments
}

TEST_CASE("math calls use the reference table") {
    auto prog = compile(parse_program("int func(int v1, int v2){ return pow(v1,v2); }"));
    CHECK(execute(prog, {2, 10}).outputs[0] == 1024);
    auto prog2 = compile(parse_program("int func(int v1){ return sqrt(v1); }"));
    CHECK(execute(prog2, {9}).outputs[0] == 3);
    CHECK(execute(prog2, {10}).outputs[0] == 3);  // truncates toward zero
    auto prog3 = compile(parse_program("int func(int v1, int v2){ return islessequal(v1,v2); }"));
    CHECK(execute(prog3, {3, 3}).outputs[0] == 1);
    CHECK(execute(prog3, {4, 3}).outputs[0] == 0);
    // Negative input to log is out of range: 0 with a warning.
    auto prog4 = compile(parse_program("int func(int v1){ return log(v1); }"));
    auto r4 = execute(prog4, {-5});
    CHECK(r4.outputs[0] == 0);
    CHECK(!r4.warnings.empty());
}

TEST_CASE("reference math spot values") {
    bool ovf = false;
    CHECK(ref_math("log", 100, 0, &ovf) == 4);      // ln(100) = 4.605..
    CHECK(ref_math("exp", 2, 0, &ovf) == 7);        // e^2 = 7.389..
    CHECK(ref_math("cos", 0, 0, &ovf) == 1);
    CHECK(ref_math("sin", 1, 0, &ovf) == 0);        // 0.841.. truncates
    CHECK(ref_math("atan2", 1, 1, &ovf) == 0);      // pi/4 truncates
    CHECK(ref_math("fmin", -3, 8, &ovf) == -3);
    CHECK(ref_math("fmax", -3, 8, &ovf) == 8);
    CHECK(ref_math("fabs", -3, 0, &ovf) == 3);
    CHECK(ref_math("pow", 3, 4, &ovf) == 81);
    CHECK(ref_math("pow", 2, -1, &ovf) == 0);       // 0.5 truncates
    CHECK(!ovf);
    ref_math("exp", 1000, 0, &ovf);                 // overflows to 0
    CHECK(ovf);
}

TEST_CASE("execute agrees with the direct tree evaluator") {
    const char* sources[] = {
        "int func(int v1, int v2){ v1=v2*v2; while(v1>v2){ v1=v1-v2; } return v1; }",
        "int func(int v1, int v2, int v3){ if(v1<=v2){ v3=v1^v2; } v1=v3|v2; v2=v1&&v3; }",
        "int func(int v1){ v1=log(fabs(v1)); return v1+1; }",
        "int func(int v1, int v2){ while(v1<v2){ v1=v1+1; if(v1==3){ continue; } v2=v2-1; } }",
        "int main(){ while(beepersPresent){ PickBeeper(); if(frontIsClear){ Move(); } } Beep(); }",
    };
    std::vector<std::vector<std::int64_t>> input_sets = {
        {3, 4}, {-7, 2, 9}, {55}, {0, 9}, {1, 1, 1, 0, 1, 0, 0, 0}};
    for (const char* src : sources) {
        Node tree = parse_program(src);
        AsmProgram prog = compile(tree);
        for (const auto& inputs : input_sets) {
            auto mres = execute(prog, inputs);
            auto href = hl_eval(tree, inputs);
            REQUIRE(mres.outputs == href.outputs);
            REQUIRE(mres.trace == href.trace);
            REQUIRE(mres.returned == href.returned);
        }
    }
}

TEST_CASE("io pairs replay bit-exactly") {
    auto tree = parse_program("int func(int v1, int v2){ v1=v1<<v2; return v1/3; }");
    auto prog = compile(tree);
    auto a = execute(prog, {123456789, 7});
    auto b = execute(prog, {123456789, 7});
    CHECK(a.outputs == b.outputs);
    CHECK(a.steps == b.steps);
}
