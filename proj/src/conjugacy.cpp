#include "kh3/conjugacy.hpp"

#include <deque>
#include <optional>

namespace kh3 {

namespace {

bool odd(long long x) { return x % 2 != 0; }

BraidWord delta_word() {
    return BraidWord{3, {{1, 1}, {2, 1}, {1, 1}}};
}

void append_power(BraidWord& w, int gen, long long count, int sign) {
    for (long long r = 0; r < count; ++r) w.letters.push_back({gen, sign});
}

struct Worker {
    long long p = 0;
    std::deque<long long> k;  // first generator is canonically sigma_1
    long long n = 0;          // sum of k

    NormalForm3 to_nf() const {
        NormalForm3 nf;
        nf.p = p;
        nf.first_gen = k.empty() ? 0 : 1;
        nf.exponents.assign(k.begin(), k.end());
        return nf;
    }
    bool all_at_least_2() const {
        for (long long e : k)
            if (e < 2) return false;
        return true;
    }
};

std::optional<LambdaFamily> lambda_family(const Worker& st) {
    const size_t m = st.k.size();
    if (m == 0) return LambdaFamily::L1;
    if (m == 1) return LambdaFamily::L2;
    if (st.all_at_least_2()) {
        if (!odd(st.p) && m % 2 == 0) return LambdaFamily::L4;
        if (odd(st.p) && m % 2 == 1) return LambdaFamily::L5;
    }
    if (m == 2 && st.k[0] == 1 && st.k[1] == 1 && !odd(st.p)) return LambdaFamily::L3;
    return std::nullopt;
}

}  // namespace

ConjugacyResult conjugate_to_lambda(const NormalForm3& nf) {
    if (!nf.valid()) throw std::invalid_argument("conjugate_to_lambda: invalid normal form");

    Worker st{nf.p, {nf.exponents.begin(), nf.exponents.end()}, nf.letter_sum()};
    BraidWord conj{3, {}};
    if (nf.first_gen == 2) conj = concat(conj, delta_word());

    std::optional<LambdaFamily> fam;
    long long guard = 2 * st.n + 8;
    while (!(fam = lambda_family(st))) {
        if (--guard < 0) throw std::logic_error("conjugate_to_lambda failed to terminate");
        const size_t m = st.k.size();
        const int last = m % 2 == 1 ? 1 : 2;

        if (m == 2 && st.k[0] == 1 && st.k[1] == 1) {
            // Delta^p s1 s2 with p odd: conjugating by s2 gives Delta^p s1^2.
            conj.letters.push_back({2, -1});
            st.k = {2};
            continue;
        }
        if (odd(static_cast<long long>(m) - st.p)) {
            // The closing syllable wraps around Delta^p onto the first one.
            const long long km = st.k.back();
            append_power(conj, last, km, -1);
            st.k.pop_back();
            st.k.front() += km;
            continue;  // lands in L2/L4/L5
        }
        // m - p even; one of the end syllables is a single letter (otherwise
        // the state would already be in L4/L5).
        if (m == 2) {
            // Both displayed syllable rewrites touch the same entry here, so
            // conjugate at the word level and renormalize.
            BraidWord u{3, {}};
            if (st.k.front() > 1) u.letters.push_back({1, 1});
            u.letters.push_back({2, 1});
            const NormalForm3 g = normal_form(concat(concat(u, to_word(st.to_nf())), inverse(u)));
            if (g.letter_sum() != st.n - 3 || g.p != st.p + 1)
                throw std::logic_error("conjugacy step did not shed a Delta");
            conj = concat(conj, inverse(u));
            if (g.first_gen == 2) conj = concat(conj, delta_word());
            st.p = g.p;
            st.k.assign(g.exponents.begin(), g.exponents.end());
            st.n -= 3;
            continue;
        }
        // Each branch absorbs a new Delta and sheds 3 tail letters. When the
        // leading syllable was a single sigma_1, the rewritten tail starts
        // with sigma_2, so a trailing Delta conjugation restores the
        // sigma_1-first convention (exponents are unchanged by it).
        bool starts_sigma2;
        if (st.k.front() == 1 && st.k.back() == 1) {
            conj.letters.push_back({last, -1});
            st.k.pop_front();
            st.k.pop_back();
            --st.k.front();
            starts_sigma2 = true;
        } else if (st.k.front() == 1) {
            conj.letters.push_back({last, -1});
            st.k.pop_front();
            --st.k.front();
            --st.k.back();
            starts_sigma2 = true;
        } else {
            conj.letters.push_back({last, -1});
            conj.letters.push_back({3 - last, -1});
            st.k.pop_back();
            --st.k.front();
            --st.k.back();
            starts_sigma2 = false;
        }
        ++st.p;
        st.n -= 3;
        if (st.k.front() < 1 || st.k.back() < 1)
            throw std::logic_error("conjugacy step produced an invalid normal form");
        if (starts_sigma2) conj = concat(conj, delta_word());
    }

    ConjugacyResult out;
    out.cls = {*fam, st.to_nf()};
    out.conjugator = conj;
    return out;
}

long long summit_infimum(const NormalForm3& nf) {
    return conjugate_to_lambda(nf).cls.rep.p;
}

namespace {

FamilyTag classify_rep(const LambdaClass& cls) {
    const NormalForm3& rep = cls.rep;
    FamilyTag tag;
    if (rep.p > 0) {
        if (rep.p == 1 && rep.exponents.empty()) {
            tag.kind = FamilyTag::Kind::N;
            tag.member = FamilyTag::NMember::Delta;
            return tag;
        }
        tag.kind = FamilyTag::Kind::C4a;
        return tag;
    }
    // summit infimum 0
    switch (cls.family) {
        case LambdaFamily::L1:
            tag.kind = FamilyTag::Kind::N;
            tag.member = FamilyTag::NMember::Trivial;
            return tag;
        case LambdaFamily::L2: {
            const long long k1 = rep.exponents[0];
            if (k1 == 1) {
                tag.kind = FamilyTag::Kind::N;
                tag.member = FamilyTag::NMember::Sigma1;
            } else if (k1 == 2) {
                tag.kind = FamilyTag::Kind::N;
                tag.member = FamilyTag::NMember::Sigma1Sq;
            } else {
                tag.kind = FamilyTag::Kind::C1;
                tag.k1 = k1;
            }
            return tag;
        }
        case LambdaFamily::L3:
            tag.kind = FamilyTag::Kind::N;
            tag.member = FamilyTag::NMember::Sigma1Sigma2;
            return tag;
        case LambdaFamily::L4: {
            if (rep.exponents.size() > 2) {
                tag.kind = FamilyTag::Kind::C4b;
                return tag;
            }
            const long long hi = std::max(rep.exponents[0], rep.exponents[1]);
            const long long lo = std::min(rep.exponents[0], rep.exponents[1]);
            if (hi == 2 && lo == 2) {
                tag.kind = FamilyTag::Kind::N;
                tag.member = FamilyTag::NMember::Sigma1SqSigma2Sq;
            } else if (lo == 2) {
                tag.kind = FamilyTag::Kind::C2;
                tag.k1 = hi;
            } else {
                tag.kind = FamilyTag::Kind::C3;
                tag.k1 = hi;
                tag.k2 = lo;
            }
            return tag;
        }
        case LambdaFamily::L5:
            break;  // odd Delta power cannot have infimum 0
    }
    throw std::logic_error("classify_family: impossible Lambda representative");
}

}  // namespace

FamilyTag classify_family(const NormalForm3& nf) {
    const auto res = conjugate_to_lambda(nf);
    if (res.cls.rep.p < 0) throw NotPositiveError();
    return classify_rep(res.cls);
}

bool try_classify_family(const NormalForm3& nf, FamilyTag& out) {
    const auto res = conjugate_to_lambda(nf);
    if (res.cls.rep.p < 0) return false;
    out = classify_rep(res.cls);
    return true;
}

std::string render_tag(const FamilyTag& tag) {
    using K = FamilyTag::Kind;
    switch (tag.kind) {
        case K::N:
            switch (tag.member) {
                case FamilyTag::NMember::Trivial: return "N(1)";
                case FamilyTag::NMember::Sigma1: return "N(s1)";
                case FamilyTag::NMember::Sigma1Sq: return "N(s1^2)";
                case FamilyTag::NMember::Sigma1Sigma2: return "N(s1 s2)";
                case FamilyTag::NMember::Sigma1SqSigma2Sq: return "N(s1^2 s2^2)";
                case FamilyTag::NMember::Delta: return "N(D)";
            }
            break;
        case K::C1: return "C1(k1=" + std::to_string(tag.k1) + ")";
        case K::C2: return "C2(k1=" + std::to_string(tag.k1) + ")";
        case K::C3:
            return "C3(k1=" + std::to_string(tag.k1) + ",k2=" + std::to_string(tag.k2) + ")";
        case K::C4a: return "C4a";
        case K::C4b: return "C4b";
    }
    return "?";
}

}  // namespace kh3
