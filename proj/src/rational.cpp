#include "kh3/rational.hpp"

#include <stdexcept>

namespace kh3 {

namespace {

// formula-level steps, no zero collapse; the public ops normalize afterwards

RationalCode raw_u(const RationalCode& code) {
    const auto& a = code.entries;
    if (a.size() < 2) throw std::invalid_argument("u_transform needs at least two boxes");
    if (a[0] < 1 || a[1] < 1) throw std::invalid_argument("u_transform needs a1, a2 >= 1");
    RationalCode out;
    out.entries.reserve(a.size() + 1);
    out.entries.push_back(a[0] - 1);
    out.entries.push_back(-1);
    out.entries.push_back(a[1] - 1);
    out.entries.insert(out.entries.end(), a.begin() + 2, a.end());
    return out;
}

RationalCode raw_t(const RationalCode& code, int i) {
    const auto& a = code.entries;
    const int m = static_cast<int>(a.size());
    if (m <= 3) throw std::invalid_argument("t_transform needs more than three boxes");
    if (i < 2 || i > m - 2) throw std::invalid_argument("t_transform index out of range");
    const size_t k = static_cast<size_t>(i - 1);  // 0-based position of the -1
    if (a[k] != -1) throw std::invalid_argument("t_transform needs a -1 at position i");
    if (a[k - 1] < 1 || a[k + 1] < 1 || a[k + 2] < 1)
        throw std::invalid_argument("t_transform needs positive neighbor boxes");
    RationalCode out = code;
    out.entries[k - 1] += 1;
    out.entries[k] = a[k + 1];
    out.entries[k + 1] = -1;
    out.entries[k + 2] -= 1;
    return out;
}

}  // namespace

RationalCode normalize_zeros(RationalCode code) {
    auto& e = code.entries;
    bool again = true;
    while (again && e.size() >= 3) {
        again = false;
        for (size_t i = 1; i + 1 < e.size(); ++i) {
            if (e[i] != 0) continue;
            e[i - 1] += e[i + 1];
            e.erase(e.begin() + static_cast<long>(i), e.begin() + static_cast<long>(i) + 2);
            again = true;
            break;
        }
    }
    return code;
}

RationalCode u_transform(const RationalCode& code) { return normalize_zeros(raw_u(code)); }

RationalCode t_transform(const RationalCode& code, int i) {
    return normalize_zeros(raw_t(code, i));
}

std::pair<RationalCode, Bookkeeping> alternating_code(const RationalCode& code) {
    const auto& a = code.entries;
    const long long m = static_cast<long long>(a.size());
    if (m < 2) throw std::invalid_argument("alternating_code needs at least two boxes");
    for (long long v : a)
        if (v < 2) throw std::invalid_argument("alternating_code needs all entries >= 2");

    RationalCode closed;
    closed.entries.reserve(static_cast<size_t>(2 * m - 1));
    for (long long i = 0; i < m; ++i) {
        long long v = a[static_cast<size_t>(i)];
        if (i > 0) --v;
        if (i + 1 < m) --v;
        closed.entries.push_back(v);
        if (i + 1 < m) closed.entries.push_back(-1);
    }

    // replay the U/T step sequence and check it reproduces the closed form
    RationalCode cur = code;
    for (long long round = m - 1; round >= 2; --round) {
        cur = raw_u(cur);
        for (int t = 2; t <= static_cast<int>(round); ++t) cur = raw_t(cur, t);
    }
    cur = raw_u(cur);
    if (!(cur == closed))
        throw std::logic_error("alternating reduction steps disagree with the closed form");

    Bookkeeping bk{0, -(m - 1), m - 1};
    return {normalize_zeros(closed), bk};
}

bool is_alternating(const RationalCode& code) {
    for (long long v : code.entries)
        if (v == 0) throw std::invalid_argument("is_alternating: zero entry");
    for (size_t i = 0; i + 1 < code.entries.size(); ++i)
        if (code.entries[i] * code.entries[i + 1] > 0) return false;
    return true;
}

}  // namespace kh3
