#pragma once

#include <stdexcept>
#include <string>

#include "kh3/normal_form.hpp"

namespace kh3 {

// Conjugacy-class representative families of 3-braids:
//   L1: Delta^p                 L2: Delta^p s1^k (k > 0)
//   L3: Delta^{2u} s1 s2        L4: Delta^{2u} s1^{k_1} s2^{k_2}...s2^{k_{2t}}, all k >= 2
//   L5: Delta^{2u+1} s1^{k_1}...s1^{k_{2t+1}}, all k >= 2
enum class LambdaFamily { L1, L2, L3, L4, L5 };

struct LambdaClass {
    LambdaFamily family;
    NormalForm3 rep;  // first_gen canonicalized to 1 when nonempty
};

struct ConjugacyResult {
    LambdaClass cls;
    BraidWord conjugator;  // c with  normal_form(c^{-1} * w * c) == cls.rep
};

// Conjugates into one of the Lambda families; every intermediate conjugation
// reduces the letter count of the tail by exactly 3 (checked), so the whole
// run is O(initial word length).
ConjugacyResult conjugate_to_lambda(const NormalForm3& nf);

// Infimum of the Lambda representative = max infimum over the conjugacy class.
long long summit_infimum(const NormalForm3& nf);

struct FamilyTag {
    enum class Kind { N, C1, C2, C3, C4a, C4b };
    enum class NMember { Trivial, Sigma1, Sigma1Sq, Sigma1Sigma2, Sigma1SqSigma2Sq, Delta };

    Kind kind = Kind::N;
    NMember member = NMember::Trivial;  // meaningful only for Kind::N
    long long k1 = 0, k2 = 0;           // C1/C2: k1; C3: k1 >= k2

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

std::string render_tag(const FamilyTag& tag);

struct NotPositiveError : std::domain_error {
    NotPositiveError() : std::domain_error("not conjugate to a positive braid") {}
};

// Classification of the conjugacy class of a braid with non-negative summit
// infimum into N, C1(k1), C2(k1), C3(k1,k2), C4a, C4b.
// Throws NotPositiveError when the summit infimum is negative.
FamilyTag classify_family(const NormalForm3& nf);

// Non-throwing variant used by the benchmark driver on arbitrary signed words.
bool try_classify_family(const NormalForm3& nf, FamilyTag& out);

}  // namespace kh3
