#pragma once

#include <vector>

#include "kh3/abelian.hpp"

namespace kh3 {

// Dense matrix over Z with arbitrary-precision entries. Row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(long long rows, long long cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {}

    long long rows() const { return rows_; }
    long long cols() const { return cols_; }
    BigInt& at(long long r, long long c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
    const BigInt& at(long long r, long long c) const {
        return data_[static_cast<size_t>(r * cols_ + c)];
    }
    bool is_zero() const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    long long rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

struct SmithResult {
    std::vector<BigInt> invariant_factors;  // d_1 | d_2 | ... | d_rank, all positive
    long long rank = 0;
};

// Smith normal form by exact elimination (minimum-magnitude pivoting); the
// transform matrices are not tracked. Divisibility of the diagonal is
// restored with diag(a,b) -> diag(gcd,lcm) passes.
SmithResult smith_normal_form(IntegerMatrix m);

}  // namespace kh3
