#include <doctest.h>

#include <stdexcept>

#include "kh3/khovanov.hpp"
#include "kh3/rational.hpp"
#include "test_util.hpp"

using namespace kh3;

namespace {

RationalCode code(std::initializer_list<long long> e) { return RationalCode{e}; }

// equality of census (p, n) for some per-component orientation of b
bool census_matches(const LinkDiagram& a, const Bookkeeping& bk, const LinkDiagram& b_in) {
    for (int mask = 0; mask < (1 << (b_in.component_count() - 1)); ++mask) {
        LinkDiagram b = b_in;
        for (int c = 1; c < b_in.component_count(); ++c)
            if ((mask >> (c - 1)) & 1) b = reorient_component(b, c);
        if (b.positive_crossings() == a.positive_crossings() + bk.delta_p &&
            b.negative_crossings() == a.negative_crossings() + bk.delta_n)
            return true;
    }
    return false;
}

}  // namespace

TEST_CASE("normalize_zeros") {
    CHECK(normalize_zeros(code({2, 0, 3})) == code({5}));
    CHECK(normalize_zeros(code({3})) == code({3}));
    CHECK(normalize_zeros(code({1, 0, -1})) == code({0}));
    CHECK(normalize_zeros(code({2, 0, -2, 0, 5})) == code({5}));
    // end zeros are structural and stay
    CHECK(normalize_zeros(code({0, -1, 0})) == code({0, -1, 0}));
}

TEST_CASE("u transform") {
    CHECK(u_transform(code({2, 2})) == code({1, -1, 1}));
    CHECK(u_transform(code({3, 2, 2})) == code({2, -1, 1, 2}));
    // ends in a structural zero rather than dropping a split component
    CHECK(u_transform(code({1, 1})) == code({0, -1, 0}));
    CHECK(homology(from_rational_code(code({1, 1}))) ==
          homology(from_rational_code(u_transform(code({1, 1})))));
    CHECK_THROWS_AS(u_transform(code({3})), std::invalid_argument);
    CHECK_THROWS_AS(u_transform(code({0, 2})), std::invalid_argument);
}

TEST_CASE("t transform") {
    CHECK(t_transform(code({1, -1, 1, 2}), 2) == code({2, 1, -1, 1}));
    CHECK(t_transform(code({2, -1, 1, 1, 3}), 2) == code({3, 1, 2}));
    CHECK_THROWS_AS(t_transform(code({1, -1, 1}), 2), std::invalid_argument);
    CHECK_THROWS_AS(t_transform(code({1, 1, 1, 2}), 2), std::invalid_argument);
}

TEST_CASE("alternating_code closed form") {
    auto [c22, bk22] = alternating_code(code({2, 2}));
    CHECK(c22 == code({1, -1, 1}));
    CHECK(bk22 == Bookkeeping{0, -1, 1});

    auto [c322, bk322] = alternating_code(code({3, 2, 2}));
    CHECK(c322 == code({2, -2, 1}));  // interior zero collapsed
    CHECK(bk322 == Bookkeeping{0, -2, 2});

    auto [c23, bk23] = alternating_code(code({2, 3}));
    CHECK(c23 == code({1, -1, 2}));
    CHECK(bk23 == Bookkeeping{0, -1, 1});

    CHECK_THROWS_AS(alternating_code(code({2})), std::invalid_argument);
    CHECK_THROWS_AS(alternating_code(code({2, 1})), std::invalid_argument);
}

TEST_CASE("is_alternating") {
    CHECK(is_alternating(code({1, -1, 1})));
    CHECK_FALSE(is_alternating(code({2, 2})));
    CHECK(is_alternating(code({2, -2, 1})));
    CHECK_THROWS_AS(is_alternating(code({2, 0, 1})), std::invalid_argument);
}

TEST_CASE("transforms preserve the link") {
    std::mt19937_64 rng(testutil::seed() + 50);
    std::uniform_int_distribution<int> mdist(2, 4), adist(1, 3);
    int knots = 0;
    for (int t = 0; t < 40 && knots < 8; ++t) {
        RationalCode c;
        const int m = mdist(rng);
        for (int i = 0; i < m; ++i) c.entries.push_back(adist(rng));
        const LinkDiagram d = from_rational_code(c);
        if (d.component_count() != 1 || d.crossing_count() > 12) continue;
        ++knots;
        const HomologyTable reference = homology(d);
        CHECK(homology(from_rational_code(u_transform(c))) == reference);
        bool all2 = true;
        for (long long v : c.entries) all2 = all2 && v >= 2;
        if (all2) {
            const auto [alt, bk] = alternating_code(c);
            CHECK(homology(from_rational_code(alt)) == reference);
        }
    }
    CHECK(knots >= 5);
    // a T move on a knot code
    const RationalCode tc = code({2, -1, 1, 2});
    REQUIRE(from_rational_code(tc).component_count() == 1);
    CHECK(homology(from_rational_code(t_transform(tc, 2))) == homology(from_rational_code(tc)));
}

TEST_CASE("alternating reduction: output shape and census") {
    std::mt19937_64 rng(testutil::seed() + 51);
    std::uniform_int_distribution<int> mdist(2, 5), adist(2, 4);
    for (int t = 0; t < 30; ++t) {
        RationalCode c;
        const int m = mdist(rng);
        for (int i = 0; i < m; ++i) c.entries.push_back(adist(rng));
        const auto [alt, bk] = alternating_code(c);
        CHECK(is_alternating(alt));
        CHECK(bk.delta_p == 0);
        CHECK(bk.delta_n == -(m - 1));
        CHECK(bk.delta_w == m - 1);
        const LinkDiagram da = from_rational_code(alt);
        CHECK(is_A_adequate(da));
        // uncollapsed closed form: |s_A| = m + 1
        RationalCode closed;
        for (int i = 0; i < m; ++i) {
            long long v = c.entries[static_cast<size_t>(i)];
            if (i > 0) --v;
            if (i + 1 < m) --v;
            closed.entries.push_back(v);
            if (i + 1 < m) closed.entries.push_back(-1);
        }
        CHECK(smooth(from_rational_code(closed), uint64_t{0}).circles == m + 1);
        // census with the orientation correspondence
        CHECK(census_matches(from_rational_code(c), bk, da));
    }
}
