#include <doctest.h>

#include "kh3/conjugacy.hpp"
#include "test_util.hpp"

using namespace kh3;

namespace {

NormalForm3 nf_of(const char* text) { return normal_form(parse_word(text, 3)); }

// representative == c^{-1} w c, verified through the normal-form engine
void check_conjugator(const BraidWord& w) {
    const auto res = conjugate_to_lambda(normal_form(w));
    const BraidWord conj = concat(concat(inverse(res.conjugator), w), res.conjugator);
    CHECK(normal_form(conj) == res.cls.rep);
}

bool family_constraints_hold(const LambdaClass& cls) {
    const auto& k = cls.rep.exponents;
    const auto all2 = [&] {
        for (long long v : k)
            if (v < 2) return false;
        return true;
    };
    switch (cls.family) {
        case LambdaFamily::L1: return k.empty();
        case LambdaFamily::L2: return k.size() == 1 && k[0] >= 1;
        case LambdaFamily::L3:
            return k == std::vector<long long>{1, 1} && cls.rep.p % 2 == 0;
        case LambdaFamily::L4:
            return !k.empty() && k.size() % 2 == 0 && all2() && cls.rep.p % 2 == 0;
        case LambdaFamily::L5:
            return k.size() >= 3 && k.size() % 2 == 1 && all2() && cls.rep.p % 2 != 0;
    }
    return false;
}

}  // namespace

TEST_CASE("conjugate_to_lambda examples") {
    // D s1 s2 conjugates to D s1^2
    const auto r1 = conjugate_to_lambda(nf_of("D a b"));
    CHECK(r1.cls.family == LambdaFamily::L2);
    CHECK(r1.cls.rep == NormalForm3{1, 1, {2}});
    check_conjugator(parse_word("D a b", 3));

    // s1 s2^2 s1 conjugates to s1^2 s2^2
    const auto r2 = conjugate_to_lambda(nf_of("a b b a"));
    CHECK(r2.cls.family == LambdaFamily::L4);
    CHECK(r2.cls.rep == NormalForm3{0, 1, {2, 2}});
    check_conjugator(parse_word("a b b a", 3));

    // s1 s2^2 conjugates to the half twist (infimum rises to 1)
    const auto r3 = conjugate_to_lambda(nf_of("a b b"));
    CHECK(r3.cls.family == LambdaFamily::L1);
    CHECK(r3.cls.rep == NormalForm3{1, 0, {}});
    check_conjugator(parse_word("a b b", 3));
}

TEST_CASE("summit infimum") {
    CHECK(summit_infimum(NormalForm3{1, 0, {}}) == 1);
    CHECK(summit_infimum(nf_of("a b b")) == 1);
    CHECK(summit_infimum(nf_of("a a b b")) == 0);
    CHECK(summit_infimum(nf_of("A")) == -1);
}

TEST_CASE("conjugator verification on random words") {
    std::mt19937_64 rng(testutil::seed() + 10);
    for (int t = 0; t < 300; ++t) {
        const BraidWord w = testutil::random_word(rng, t % 25, false);
        check_conjugator(w);
        CHECK(family_constraints_hold(conjugate_to_lambda(normal_form(w)).cls));
    }
}

TEST_CASE("summit infimum and family are conjugation invariants") {
    std::mt19937_64 rng(testutil::seed() + 11);
    for (int t = 0; t < 200; ++t) {
        const BraidWord w = testutil::random_word(rng, 1 + t % 14, false);
        const BraidWord g = testutil::random_word(rng, t % 6, false);
        const BraidWord conj = concat(concat(inverse(g), w), g);
        CHECK(summit_infimum(normal_form(conj)) == summit_infimum(normal_form(w)));
        FamilyTag a, b;
        const bool pa = try_classify_family(normal_form(w), a);
        const bool pb = try_classify_family(normal_form(conj), b);
        CHECK(pa == pb);
        if (pa) CHECK(a == b);
    }
}

TEST_CASE("classify_family examples") {
    CHECK(classify_family(nf_of("D a")) == FamilyTag{FamilyTag::Kind::C4a, {}, 0, 0});
    CHECK(classify_family(nf_of("a a a a b b")) == FamilyTag{FamilyTag::Kind::C2, {}, 4, 0});
    CHECK(classify_family(nf_of("a a b b a a b b")).kind == FamilyTag::Kind::C4b);
    CHECK(classify_family(nf_of("a b b")) ==
          FamilyTag{FamilyTag::Kind::N, FamilyTag::NMember::Delta, 0, 0});
    CHECK(classify_family(nf_of("a a a")) == FamilyTag{FamilyTag::Kind::C1, {}, 3, 0});
    CHECK(classify_family(nf_of("a a a b b b b b")) ==
          FamilyTag{FamilyTag::Kind::C3, {}, 5, 3});
    CHECK(classify_family(nf_of("")) ==
          FamilyTag{FamilyTag::Kind::N, FamilyTag::NMember::Trivial, 0, 0});
    CHECK(classify_family(nf_of("b")) ==
          FamilyTag{FamilyTag::Kind::N, FamilyTag::NMember::Sigma1, 0, 0});
    CHECK(classify_family(nf_of("a b")) ==
          FamilyTag{FamilyTag::Kind::N, FamilyTag::NMember::Sigma1Sigma2, 0, 0});
    CHECK(classify_family(nf_of("a a b b")) ==
          FamilyTag{FamilyTag::Kind::N, FamilyTag::NMember::Sigma1SqSigma2Sq, 0, 0});
    CHECK(classify_family(nf_of("D D")) == FamilyTag{FamilyTag::Kind::C4a, {}, 0, 0});
    CHECK_THROWS_AS(classify_family(nf_of("A")), NotPositiveError);
}

TEST_CASE("render_tag") {
    CHECK(render_tag(classify_family(nf_of("a a a a b b"))) == "C2(k1=4)");
    CHECK(render_tag(classify_family(nf_of("a b b"))) == "N(D)");
}
