#include <doctest.h>

#include "golden_tables.hpp"
#include "kh3/render.hpp"
#include "test_util.hpp"

using namespace kh3;

TEST_CASE("json round trips") {
    std::mt19937_64 rng(testutil::seed() + 60);
    for (int t = 0; t < 40; ++t) {
        const NormalForm3 nf = normal_form(testutil::random_word(rng, t % 17, false));
        CHECK(nf_from_json(nf_to_json(nf)) == nf);
    }

    const HomologyTable table = golden::to_table(golden::by_word("a a a b b b"));
    CHECK(table_from_json(table_to_json(table)) == table);

    const auto res = conjugate_to_lambda(normal_form(parse_word("D D a b", 3)));
    const PartialTable shape = extended_shape(res.cls.rep);
    CHECK(partial_from_json(partial_to_json(shape)) == shape);

    const RationalCode code{{2, -1, 0, 4}};
    CHECK(code_from_json(code_to_json(code)) == code);
    CHECK(parse_code(render_code(code)) == code);
    CHECK(parse_code("") == RationalCode{});
    CHECK_THROWS_AS(parse_code("2,,3"), std::invalid_argument);
}

TEST_CASE("ascii rendering") {
    const HomologyTable trefoil = golden::to_table(golden::by_word("D a"));
    const std::string text = render_table(trefoil);
    CHECK(text.find("j\\i") != std::string::npos);
    CHECK(text.find("Z/2") != std::string::npos);

    const auto res = conjugate_to_lambda(normal_form(parse_word("a a a a a", 3)));
    const std::string shaded = render_partial(extended_shape(res.cls.rep));
    CHECK(shaded.find('W') != std::string::npos);  // residual block label visible

    CHECK(render_group(abelian_group(2, {BigInt(2)})) == "Z^2+Z/2");
    CHECK(render_group(AbelianGroup{}) == "0");
    LaurentPoly p;
    p.add(3, 1);
    p.add(1, 3);
    p.add(-1, 3);
    p.add(-3, 1);
    CHECK(render_poly(p) == "q^3 + 3q + 3q^-1 + q^-3");
}
