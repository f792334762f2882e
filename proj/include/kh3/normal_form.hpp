#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kh3/braid.hpp"

namespace kh3 {

// Left normal form of a 3-braid, stored in compressed syllable form:
//   Delta^p  sigma_{a}^{k_1} sigma_{a'}^{k_2} ... (generators alternating)
// where a = first_gen and a' = 3 - a.  first_gen is 0 exactly when the
// exponent list is empty.  Validity: k_1, k_m >= 1 and every interior
// exponent >= 2 (left-weightedness of the simple-factor decomposition).
struct NormalForm3 {
    long long p = 0;
    int first_gen = 0;
    std::vector<long long> exponents;

    int last_gen() const {
        if (exponents.empty()) return 0;
        return exponents.size() % 2 == 1 ? first_gen : 3 - first_gen;
    }
    long long letter_sum() const;  // k_1 + ... + k_m
    bool valid() const;

    friend bool operator==(const NormalForm3&, const NormalForm3&) = default;
};

// Multiplies the normal form on the right by sigma_gen (gen = 1 or 2) and
// renormalizes. Constant time: only the tail of the exponent list changes.
void push_generator_inplace(NormalForm3& nf, int gen);
NormalForm3 push_generator(NormalForm3 nf, int gen);

// Left normal form of a word on 3 strands, O(word length): each inverse
// letter is rewritten as Delta^{-1} times two positive letters, the
// Delta^{-1}s slide to the front (conjugation swaps sigma_1 <-> sigma_2),
// and the positive tail is folded with push_generator_inplace.
// Throws std::invalid_argument when w.strands != 3.
NormalForm3 normal_form(const BraidWord& w);

// (inf, sup) = (p, p + number of simple factors).
std::pair<long long, long long> inf_sup(const NormalForm3& nf);

enum class SimpleFactor { Sigma1, Sigma2, Sigma1Sigma2, Sigma2Sigma1, Delta };

// The non-Delta simple factors of the left normal form, in order.
std::vector<SimpleFactor> simple_factors(const NormalForm3& nf);

// Expansion back to a word (Delta = s1 s2 s1; Delta^{-1} = its inverse).
BraidWord to_word(const NormalForm3& nf);

// Text form `(p; k1,k2,...,km; first=a)`; the last segment is empty when m = 0.
std::string render_nf(const NormalForm3& nf);

}  // namespace kh3
