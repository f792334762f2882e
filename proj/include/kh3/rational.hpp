#pragma once

#include "kh3/diagram.hpp"

namespace kh3 {

// Crossing-census change across a rational-diagram rewrite.
struct Bookkeeping {
    long long delta_p = 0, delta_n = 0, delta_w = 0;  // delta_w = delta_p - delta_n
    friend bool operator==(const Bookkeeping&, const Bookkeeping&) = default;
};

// Repeatedly merges interior zero boxes: (..., x, 0, y, ...) -> (..., x+y, ...).
// End zeros are structural (they change the closure pattern) and stay; codes
// such as [0] are terminal.
RationalCode normalize_zeros(RationalCode code);

// (a1, a2, ...) -> (a1-1, -1, a2-1, ...), then normalize_zeros.
// Requires m > 1 and a1, a2 >= 1.
RationalCode u_transform(const RationalCode& code);

// With a -1 at 1-based position i (2 <= i <= m-2, m > 3) and
// a_{i-1}, a_{i+1}, a_{i+2} >= 1:
// (..., a_{i-1}, -1, a_{i+1}, a_{i+2}, ...) ->
// (..., a_{i-1}+1, a_{i+1}, -1, a_{i+2}-1, ...), then normalize_zeros.
RationalCode t_transform(const RationalCode& code, int i);

// Alternating reduction of a code with m > 1 boxes, all entries >= 2:
// (a1-1, -1, a2-2, -1, ..., a_{m-1}-2, -1, a_m-1), normalized, together with
// the census change (0, -(m-1), +(m-1)). The closed form is cross-checked
// against the full U/T step sequence on every call.
std::pair<RationalCode, Bookkeeping> alternating_code(const RationalCode& code);

// True iff adjacent entries alternate in sign. Throws on zero entries.
bool is_alternating(const RationalCode& code);

}  // namespace kh3
