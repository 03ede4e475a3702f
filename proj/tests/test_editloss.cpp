#include "doctest.h"

#include "relift/editloss.hpp"
#include "relift/compiler.hpp"
#include "relift/lang_text.hpp"
#include "relift/rng.hpp"
#include "support/brute.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace relift;

namespace {

std::vector<std::string> rand_seq(Rng& rng, std::size_t max_len, int alphabet) {
    std::vector<std::string> out;
    std::size_t len = rng.below(max_len + 1);
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        out.push_back(std::string(1, char('a' + rng.below(static_cast<std::uint64_t>(alphabet)))));
    return out;
}

}  // namespace

TEST_CASE("known distances") {
    using V = std::vector<std::string>;
    CHECK(edit_loss(V{}, V{}) == 0);
    CHECK(edit_loss(V{"a"}, V{}) == 1);
    CHECK(edit_loss(V{}, V{"a", "b"}) == 2);
    CHECK(edit_loss(V{"k", "i", "t", "t", "e", "n"}, V{"s", "i", "t", "t", "i", "n", "g"}) == 3);
    CHECK(edit_loss(V{"lw", "$1", "8", "$fp"}, V{"lw", "$2", "8", "$fp"}) == 1);
    CHECK(edit_loss(V{"a", "b", "c"}, V{"a", "b", "c"}) == 0);
}

TEST_CASE("matches brute force on random pairs") {
    Rng rng(derive_seed(41, "editloss-brute", 0));
    for (int i = 0; i < 400; ++i) {
        auto a = rand_seq(rng, 8, 5);
        auto b = rand_seq(rng, 8, 5);
        CAPTURE(join(a, " "));
        CAPTURE(join(b, " "));
        REQUIRE(edit_loss(a, b) == testsupport::brute_edit_distance(a, b));
    }
}

TEST_CASE("metric axioms hold on random triples") {
    Rng rng(derive_seed(41, "editloss-metric", 0));
    for (int i = 0; i < 300; ++i) {
        auto a = rand_seq(rng, 10, 4);
        auto b = rand_seq(rng, 10, 4);
        auto c = rand_seq(rng, 10, 4);
        std::size_t ab = edit_loss(a, b);
        std::size_t ba = edit_loss(b, a);
        std::size_t ac = edit_loss(a, c);
        std::size_t cb = edit_loss(c, b);
        REQUIRE(ab == ba);
        REQUIRE(edit_loss(a, a) == 0);
        if (ab == 0) REQUIRE(a == b);
        REQUIRE(ab <= ac + cb);
    }
}

TEST_CASE("distance is bounded by the longer sequence") {
    Rng rng(derive_seed(41, "editloss-bound", 0));
    for (int i = 0; i < 200; ++i) {
        auto a = rand_seq(rng, 12, 3);
        auto b = rand_seq(rng, 12, 3);
        std::size_t d = edit_loss(a, b);
        std::size_t longer = std::max(a.size(), b.size());
        std::size_t diff = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
        REQUIRE(d <= longer);
        REQUIRE(d >= diff);
    }
}

TEST_CASE("verify_match scores a candidate tree against target code") {
    auto target_tree = parse_program("int func(int v1, int v2){ return v1+v2; }");
    auto target_asm = compile(target_tree).tokens();

    auto exact = verify_match(target_tree, target_asm);
    CHECK(exact.matched);
    CHECK(exact.distance == 0);

    auto near_tree = parse_program("int func(int v1, int v2){ return v1-v2; }");
    auto near = verify_match(near_tree, target_asm);
    CHECK(!near.matched);
    CHECK(near.distance == 1);  // add vs sub mnemonic

    auto far_tree = parse_program("int func(int v1, int v2){ v1=v2; while(v1){ v1=v1-1; } }");
    auto far = verify_match(far_tree, target_asm);
    CHECK(!far.matched);
    CHECK(far.distance > near.distance);
}
