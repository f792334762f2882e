#include <doctest.h>

#include <stdexcept>

#include "kh3/normal_form.hpp"
#include "test_util.hpp"

using namespace kh3;

namespace {
NormalForm3 nf3(long long p, int first, std::vector<long long> k) {
    return NormalForm3{p, first, std::move(k)};
}
}  // namespace

TEST_CASE("push_generator cases") {
    CHECK(push_generator(nf3(2, 0, {}), 1) == nf3(2, 1, {1}));
    CHECK(push_generator(nf3(0, 1, {1, 1}), 1) == nf3(1, 0, {}));
    CHECK(push_generator(nf3(0, 1, {2}), 2) == nf3(0, 1, {2, 1}));
    // remaining cases
    CHECK(push_generator(nf3(0, 1, {3}), 1) == nf3(0, 1, {4}));
    CHECK(push_generator(nf3(0, 1, {1}), 2) == nf3(0, 1, {1, 1}));
    CHECK(push_generator(nf3(0, 1, {2, 1}), 1) == nf3(1, 2, {1}));  // s1^2 s2 s1 = D s2
}

TEST_CASE("normal_form examples") {
    CHECK(normal_form(parse_word("s1 s2 s1", 3)) == nf3(1, 0, {}));
    CHECK(normal_form(parse_word("s2 s1 s2", 3)) == nf3(1, 0, {}));
    CHECK(normal_form(parse_word("s1^-1", 3)) == nf3(-1, 1, {1, 1}));
    CHECK(normal_form(parse_word("s2^-1", 3)) == nf3(-1, 2, {1, 1}));
    CHECK(normal_form(parse_word("s1^2 s2^4 s1", 3)) == nf3(0, 1, {2, 4, 1}));
    CHECK(normal_form(parse_word("", 3)) == nf3(0, 0, {}));
    CHECK_THROWS_AS(normal_form(parse_word("s1", 2)), std::invalid_argument);
}

TEST_CASE("render_nf matches the documented format") {
    CHECK(render_nf(normal_form(parse_word("s1 s2 s1", 3))) == "(1; ; )");
    CHECK(render_nf(normal_form(parse_word("A", 3))) == "(-1; 1,1; first=1)");
    CHECK(render_nf(normal_form(parse_word("", 3))) == "(0; ; )");
}

TEST_CASE("inf and sup") {
    CHECK(inf_sup(nf3(1, 0, {})) == std::pair<long long, long long>{1, 1});
    CHECK(inf_sup(nf3(0, 1, {2, 4, 1})) == std::pair<long long, long long>{0, 5});
    // cross-check the supremum against the simple-factor list
    const NormalForm3 nf = nf3(-1, 1, {1, 1});
    CHECK(inf_sup(nf) ==
          std::pair<long long, long long>{-1, -1 + static_cast<long long>(simple_factors(nf).size())});
    CHECK(inf_sup(nf) == std::pair<long long, long long>{-1, 0});
}

TEST_CASE("simple factors") {
    using SF = SimpleFactor;
    CHECK(simple_factors(nf3(0, 1, {2, 4, 1})) ==
          std::vector<SF>{SF::Sigma1, SF::Sigma1Sigma2, SF::Sigma2, SF::Sigma2, SF::Sigma2Sigma1});
    CHECK(simple_factors(nf3(3, 0, {})).empty());
    CHECK(simple_factors(nf3(0, 1, {1, 1})) == std::vector<SF>{SF::Sigma1Sigma2});
    // factor count equals sup - inf on random positive braids
    std::mt19937_64 rng(testutil::seed() + 2);
    for (int t = 0; t < 50; ++t) {
        const NormalForm3 nf = normal_form(testutil::random_word(rng, 1 + t % 19, true));
        const auto [lo, hi] = inf_sup(nf);
        CHECK(static_cast<long long>(simple_factors(nf).size()) == hi - lo);
    }
}

TEST_CASE("normal form is invariant under word rewriting") {
    std::mt19937_64 rng(testutil::seed() + 3);
    for (int t = 0; t < 200; ++t) {
        BraidWord w = testutil::random_word(rng, t % 15, false);
        const NormalForm3 reference = normal_form(w);
        for (int r = 0; r < 4; ++r) {
            w = testutil::rewritten(rng, w);
            CHECK(normal_form(w) == reference);
        }
    }
}

TEST_CASE("positive words: p >= 0 and letter budget") {
    std::mt19937_64 rng(testutil::seed() + 4);
    for (int t = 0; t < 100; ++t) {
        const BraidWord w = testutil::random_word(rng, t % 21, true);
        const NormalForm3 nf = normal_form(w);
        CHECK(nf.p >= 0);
        CHECK(nf.letter_sum() + 3 * nf.p == word_length(w));
    }
}

TEST_CASE("push_generator preserves validity") {
    std::mt19937_64 rng(testutil::seed() + 5);
    std::uniform_int_distribution<int> gen(1, 2);
    NormalForm3 nf;
    for (int t = 0; t < 2000; ++t) {
        push_generator_inplace(nf, gen(rng));
        REQUIRE(nf.valid());
    }
    // round trip through the word expansion
    CHECK(normal_form(to_word(nf)) == nf);
}
