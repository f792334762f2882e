#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace kh3 {

using BigInt = boost::multiprecision::cpp_int;

// Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_s with the
// invariant factors in a divisibility chain d_1 | d_2 | ..., each >= 2.
struct AbelianGroup {
    long long free_rank = 0;
    std::vector<BigInt> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup free_abelian(long long rank);

// Z/2 x ... repeated factors; `factors` need not be sorted on input.
AbelianGroup abelian_group(long long rank, std::vector<BigInt> factors);

// Direct-sum complement: whole = part + result, where `part` must embed
// factor-by-factor (free ranks dominate and part's invariant factors are a
// sub-multiset of whole's). Throws std::domain_error otherwise.
AbelianGroup complement(const AbelianGroup& whole, const AbelianGroup& part);

bool is_summand(const AbelianGroup& whole, const AbelianGroup& part);

// "Z^2+Z/2" style rendering; "0" for the trivial group.
std::string render_group(const AbelianGroup& g);

}  // namespace kh3
