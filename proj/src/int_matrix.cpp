#include "kh3/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace kh3 {

bool IntegerMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    IntegerMatrix out(a.rows(), b.cols());
    for (long long i = 0; i < a.rows(); ++i)
        for (long long k = 0; k < a.cols(); ++k) {
            const BigInt& av = a.at(i, k);
            if (av == 0) continue;
            for (long long j = 0; j < b.cols(); ++j) {
                const BigInt& bv = b.at(k, j);
                if (bv != 0) out.at(i, j) += av * bv;
            }
        }
    return out;
}

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

BigInt gcd_big(BigInt a, BigInt b) {
    a = abs_big(a);
    b = abs_big(b);
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

SmithResult smith_normal_form(IntegerMatrix m) {
    const long long rows = m.rows(), cols = m.cols();
    const long long steps = std::min(rows, cols);
    std::vector<BigInt> diag;

    for (long long t = 0; t < steps; ++t) {
        // find a pivot of minimal |value| in the trailing block
        long long pr = -1, pc = -1;
        BigInt best = 0;
        for (long long r = t; r < rows; ++r)
            for (long long c = t; c < cols; ++c) {
                const BigInt& v = m.at(r, c);
                if (v == 0) continue;
                BigInt a = abs_big(v);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;  // all zero

        for (;;) {
            if (pr != t)
                for (long long c = t; c < cols; ++c) std::swap(m.at(t, c), m.at(pr, c));
            if (pc != t)
                for (long long r = t; r < rows; ++r) std::swap(m.at(r, t), m.at(r, pc));

            // clear column t with division steps; restart pivot search on a
            // nonzero remainder (the remainder is strictly smaller)
            bool clean = true;
            for (long long r = t + 1; r < rows && clean; ++r) {
                if (m.at(r, t) == 0) continue;
                BigInt q = m.at(r, t) / m.at(t, t);
                for (long long c = t; c < cols; ++c) m.at(r, c) -= q * m.at(t, c);
                if (m.at(r, t) != 0) {
                    pr = r;
                    pc = t;
                    clean = false;
                }
            }
            if (!clean) continue;
            for (long long c = t + 1; c < cols && clean; ++c) {
                if (m.at(t, c) == 0) continue;
                BigInt q = m.at(t, c) / m.at(t, t);
                for (long long r = t; r < rows; ++r) m.at(r, c) -= q * m.at(r, t);
                if (m.at(t, c) != 0) {
                    pr = t;
                    pc = c;
                    clean = false;
                }
            }
            if (clean) break;
        }
        diag.push_back(abs_big(m.at(t, t)));
    }

    // restore the divisibility chain: diag(a,b) ~ diag(gcd(a,b), lcm(a,b))
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] % diag[i] == 0) continue;
            BigInt g = gcd_big(diag[i], diag[i + 1]);
            BigInt l = diag[i] / g * diag[i + 1];
            diag[i] = g;
            diag[i + 1] = l;
            changed = true;
        }
    }

    SmithResult out;
    out.rank = static_cast<long long>(diag.size());
    out.invariant_factors = std::move(diag);
    return out;
}

}  // namespace kh3
