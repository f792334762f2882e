#include "kh3/normal_form.hpp"

#include <numeric>
#include <stdexcept>

namespace kh3 {

long long NormalForm3::letter_sum() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0LL);
}

bool NormalForm3::valid() const {
    const size_t m = exponents.size();
    if (m == 0) return first_gen == 0;
    if (first_gen != 1 && first_gen != 2) return false;
    if (exponents.front() < 1 || exponents.back() < 1) return false;
    for (size_t i = 1; i + 1 < m; ++i)
        if (exponents[i] < 2) return false;
    return true;
}

void push_generator_inplace(NormalForm3& nf, int gen) {
    if (gen != 1 && gen != 2) throw std::invalid_argument("generator must be 1 or 2");
    auto& k = nf.exponents;
    if (k.empty()) {
        nf.first_gen = gen;
        k.push_back(1);
        return;
    }
    if (gen == nf.last_gen()) {
        ++k.back();
        return;
    }
    if (k.back() > 1) {
        k.push_back(1);
        return;
    }
    // gen differs from the last letter and the last syllable is a single letter
    if (k.size() == 1) {  // n = 1: tail was a lone sigma_a
        k.push_back(1);
        return;
    }
    if (k.size() == 2 && k.front() == 1) {  // n = 2: tail sigma_a sigma_{a'} closes a Delta
        ++nf.p;
        nf.first_gen = 0;
        k.clear();
        return;
    }
    // n > 2: the last three letters fuse into a Delta that slides left,
    // flipping the generators of the rest of the tail.
    k.pop_back();
    --k.back();
    nf.first_gen = 3 - nf.first_gen;
    ++nf.p;
}

NormalForm3 push_generator(NormalForm3 nf, int gen) {
    push_generator_inplace(nf, gen);
    return nf;
}

NormalForm3 normal_form(const BraidWord& w) {
    if (w.strands != 3) throw std::invalid_argument("normal_form requires a 3-strand word");
    long long negatives = 0;
    for (const auto& l : w.letters)
        if (l.sign < 0) ++negatives;

    NormalForm3 nf;
    nf.p = -negatives;
    long long seen_neg = 0;
    for (const auto& l : w.letters) {
        if (l.sign > 0) {
            const long long flips = negatives - seen_neg;
            push_generator_inplace(nf, flips % 2 ? 3 - l.index : l.index);
        } else {
            // sigma_i^{-1} = Delta^{-1} sigma_i sigma_{3-i}; the Delta^{-1} is
            // already left of the two emitted letters, so only later ones flip them.
            const long long flips = negatives - seen_neg - 1;
            const int g = flips % 2 ? 3 - l.index : l.index;
            push_generator_inplace(nf, g);
            push_generator_inplace(nf, 3 - g);
            ++seen_neg;
        }
    }
    return nf;
}

std::pair<long long, long long> inf_sup(const NormalForm3& nf) {
    const long long m = static_cast<long long>(nf.exponents.size());
    const long long factors = m == 0 ? 0 : nf.letter_sum() - (m - 1);
    return {nf.p, nf.p + factors};
}

std::vector<SimpleFactor> simple_factors(const NormalForm3& nf) {
    std::vector<SimpleFactor> out;
    const size_t m = nf.exponents.size();
    int gen = nf.first_gen;
    for (size_t i = 0; i < m; ++i) {
        long long singles = nf.exponents[i];
        if (i > 0) --singles;      // first letter absorbed by the previous junction
        if (i + 1 < m) --singles;  // last letter goes into the next junction
        for (long long s = 0; s < singles; ++s)
            out.push_back(gen == 1 ? SimpleFactor::Sigma1 : SimpleFactor::Sigma2);
        if (i + 1 < m)
            out.push_back(gen == 1 ? SimpleFactor::Sigma1Sigma2 : SimpleFactor::Sigma2Sigma1);
        gen = 3 - gen;
    }
    return out;
}

BraidWord to_word(const NormalForm3& nf) {
    BraidWord w;
    w.strands = 3;
    const int dsign = nf.p >= 0 ? 1 : -1;
    for (long long r = 0; r < (nf.p >= 0 ? nf.p : -nf.p); ++r) {
        if (dsign > 0) {
            w.letters.push_back({1, 1});
            w.letters.push_back({2, 1});
            w.letters.push_back({1, 1});
        } else {
            w.letters.push_back({1, -1});
            w.letters.push_back({2, -1});
            w.letters.push_back({1, -1});
        }
    }
    int gen = nf.first_gen;
    for (long long k : nf.exponents) {
        for (long long r = 0; r < k; ++r) w.letters.push_back({gen, 1});
        gen = 3 - gen;
    }
    return w;
}

std::string render_nf(const NormalForm3& nf) {
    std::string out = "(" + std::to_string(nf.p) + "; ";
    for (size_t i = 0; i < nf.exponents.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(nf.exponents[i]);
    }
    out += "; ";
    if (!nf.exponents.empty()) out += "first=" + std::to_string(nf.first_gen);
    out += ")";
    return out;
}

}  // namespace kh3
