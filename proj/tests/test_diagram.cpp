#include <doctest.h>

#include <stdexcept>

#include <numeric>

#include "kh3/diagram.hpp"
#include "kh3/rational.hpp"
#include "test_util.hpp"

using namespace kh3;

TEST_CASE("braid closure construction") {
    const LinkDiagram empty3 = from_braid_closure(parse_word("", 3));
    CHECK(empty3.crossing_count() == 0);
    CHECK(empty3.component_count() == 3);

    const LinkDiagram d = from_braid_closure(parse_word("s1 s2 s1 s1", 3));
    CHECK(d.crossing_count() == 4);
    CHECK(d.writhe() == 4);
    CHECK(d.negative_crossings() == 0);

    const LinkDiagram hopf = from_braid_closure(parse_word("s1^2", 2));
    CHECK(hopf.crossing_count() == 2);
    CHECK(hopf.writhe() == 2);
    CHECK(hopf.component_count() == 2);
}

TEST_CASE("circle counts") {
    const LinkDiagram empty3 = from_braid_closure(parse_word("", 3));
    CHECK(circle_count(empty3, State{}) == 3);

    const LinkDiagram hopf = from_braid_closure(parse_word("s1^2", 2));
    CHECK(circle_count(hopf, State{Label::A, Label::A}) == 2);
    CHECK(circle_count(hopf, State{Label::A, Label::B}) == 1);
    CHECK(circle_count(hopf, State{Label::B, Label::B}) == 2);
}

TEST_CASE("j bounds") {
    CHECK(j_bounds(from_braid_closure(parse_word("D a", 3))).first == 1);
    CHECK(j_bounds(from_braid_closure(parse_word("", 1))) == std::pair<int, int>{-1, 1});
    CHECK(j_bounds(from_braid_closure(parse_word("s1^5 s2^4", 3))).first == 6);
}

TEST_CASE("A-adequacy") {
    std::mt19937_64 rng(testutil::seed() + 30);
    for (int t = 0; t < 40; ++t)
        CHECK(is_A_adequate(from_braid_closure(testutil::random_word(rng, 1 + t % 11, true))));

    // positive kink: positive diagrams are A-adequate
    CHECK(is_A_adequate(from_braid_closure(parse_word("s1", 2))));
    // the kink whose A-smoothing touches one circle twice is not
    CHECK_FALSE(is_A_adequate(from_braid_closure(parse_word("s1^-1", 2))));

    const auto [alt, bk] = alternating_code(RationalCode{{3, 2, 2}});
    CHECK(is_A_adequate(from_rational_code(alt)));
}

TEST_CASE("component count") {
    CHECK(component_count(from_braid_closure(parse_word("", 3))) == 3);
    CHECK(component_count(from_braid_closure(parse_word("a b", 3))) == 1);
    CHECK(component_count(from_braid_closure(parse_word("D", 3))) == 2);
}

TEST_CASE("diagram invariants under random construction") {
    std::mt19937_64 rng(testutil::seed() + 31);
    for (int t = 0; t < 60; ++t) {
        const BraidWord w = testutil::random_word(rng, t % 13, false, 2 + t % 3);
        const LinkDiagram d = from_braid_closure(w);
        CHECK(d.positive_crossings() + d.negative_crossings() == d.crossing_count());
        CHECK(d.writhe() == d.positive_crossings() - d.negative_crossings());
        if (!w.letters.empty()) {
            // flipping one smoothing changes the circle count by exactly one
            State s(static_cast<size_t>(d.crossing_count()), Label::A);
            std::uniform_int_distribution<int> pick(0, d.crossing_count() - 1);
            for (int r = 0; r < 5; ++r) {
                const int before = circle_count(d, s);
                const int k = pick(rng);
                s[static_cast<size_t>(k)] =
                    s[static_cast<size_t>(k)] == Label::A ? Label::B : Label::A;
                const int after = circle_count(d, s);
                CHECK(std::abs(after - before) == 1);
            }
        }
    }
}

TEST_CASE("positive braid closures: all-A circles and j_min") {
    std::mt19937_64 rng(testutil::seed() + 32);
    for (int t = 0; t < 40; ++t) {
        const int strands = 2 + t % 3;
        const BraidWord w = testutil::random_word(rng, 1 + t % 11, true, strands);
        const LinkDiagram d = from_braid_closure(w);
        CHECK(smooth(d, uint64_t{0}).circles == strands);
        CHECK(j_bounds(d).first == d.crossing_count() - strands);
    }
}

TEST_CASE("rational diagram crossing counts and orientation bookkeeping") {
    std::mt19937_64 rng(testutil::seed() + 33);
    std::uniform_int_distribution<int> mdist(1, 5), adist(-4, 4);
    for (int t = 0; t < 60; ++t) {
        RationalCode code;
        const int m = mdist(rng);
        for (int i = 0; i < m; ++i) code.entries.push_back(adist(rng));
        const LinkDiagram d = from_rational_code(code);
        long long total = 0;
        for (long long v : code.entries) total += v >= 0 ? v : -v;
        CHECK(d.crossing_count() == total);
        CHECK(d.positive_crossings() + d.negative_crossings() == d.crossing_count());
        CHECK(d.component_count() <= 2);
        CHECK(d.component_count() >= 1);
    }
    CHECK_THROWS_AS(from_rational_code(RationalCode{}), std::invalid_argument);
}

TEST_CASE("pd code export") {
    const LinkDiagram d = from_braid_closure(parse_word("a B", 3));
    const std::string pd = pd_code(d);
    CHECK(std::count(pd.begin(), pd.end(), '\n') == 2);
    CHECK(pd.find("+1") != std::string::npos);
    CHECK(pd.find("-1") != std::string::npos);
}

TEST_CASE("crossing permutation keeps the diagram data") {
    const LinkDiagram d = from_braid_closure(parse_word("a b a", 3));
    const LinkDiagram p = permute_crossings(d, {2, 0, 1});
    CHECK(p.crossing_count() == 3);
    CHECK(p.writhe() == d.writhe());
    CHECK(p.crossing(0).arc == d.crossing(2).arc);
}
