#pragma once

#include <map>
#include <string>

namespace kh3 {

// Laurent polynomial in q with integer coefficients. Coefficient magnitudes
// here are bounded by enhanced-state counts, so long long is ample.
struct LaurentPoly {
    std::map<int, long long> coeff;  // exponent -> coefficient, zeros erased

    void add(int exponent, long long value) {
        if (value == 0) return;
        auto it = coeff.find(exponent);
        if (it == coeff.end()) {
            coeff.emplace(exponent, value);
        } else if ((it->second += value) == 0) {
            coeff.erase(it);
        }
    }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

// "q^5 - q + 3q^-1" style; "0" for the zero polynomial.
std::string render_poly(const LaurentPoly& p);

}  // namespace kh3
