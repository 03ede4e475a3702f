#include <benchmark/benchmark.h>

#include "relift/compiler.hpp"
#include "relift/editloss.hpp"
#include "relift/interp.hpp"
#include "relift/lang_text.hpp"
#include "relift/rng.hpp"

#include <string>
#include <vector>

namespace {

const char* kSample =
    "int func(int v1, int v2, int v3){"
    " v1=v2*v3+v1;"
    " while(v1>v2){ v1=v1-v3; if(v1==v2){ continue; } v2=v2+1; }"
    " v3=v1^v2;"
    " return v3; }";

std::vector<std::string> rand_tokens(relift::Rng& rng, std::size_t n) {
    static const char* pool[] = {"lw", "sw", "add", "$1", "$2", "$fp", "8", "12", "beq", "$B1"};
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(pool[rng.below(10)]);
    return out;
}

void BM_Parse(benchmark::State& state) {
    for (auto _ : state) {
        auto tree = relift::parse_program(kSample);
        benchmark::DoNotOptimize(tree);
    }
}
BENCHMARK(BM_Parse);

void BM_Compile(benchmark::State& state) {
    auto tree = relift::parse_program(kSample);
    for (auto _ : state) {
        auto prog = relift::compile(tree);
        benchmark::DoNotOptimize(prog);
    }
}
BENCHMARK(BM_Compile);

void BM_Execute(benchmark::State& state) {
    auto prog = relift::compile(relift::parse_program(kSample));
    std::vector<std::int64_t> inputs = {5, 3, 2};
    for (auto _ : state) {
        auto res = relift::execute(prog, inputs);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_Execute);

void BM_EditLoss(benchmark::State& state) {
    relift::Rng rng(7);
    auto a = rand_tokens(rng, static_cast<std::size_t>(state.range(0)));
    auto b = rand_tokens(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(relift::edit_loss(a, b));
    }
}
BENCHMARK(BM_EditLoss)->Arg(32)->Arg(128)->Arg(512);

void BM_LcrsRoundTrip(benchmark::State& state) {
    auto tree = relift::parse_program(kSample);
    for (auto _ : state) {
        auto bin = relift::to_lcrs(tree);
        auto back = relift::from_lcrs(*bin);
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_LcrsRoundTrip);

}  // namespace

BENCHMARK_MAIN();
