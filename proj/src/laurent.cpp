#include "kh3/laurent.hpp"

namespace kh3 {

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (auto [e, v] : b.coeff) out.add(e, v);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (auto [ea, va] : a.coeff)
        for (auto [eb, vb] : b.coeff) out.add(ea + eb, va * vb);
    return out;
}

std::string render_poly(const LaurentPoly& p) {
    if (p.coeff.empty()) return "0";
    std::string out;
    for (auto it = p.coeff.rbegin(); it != p.coeff.rend(); ++it) {
        const auto [e, v] = *it;
        if (out.empty()) {
            if (v < 0) out += '-';
        } else {
            out += v < 0 ? " - " : " + ";
        }
        const long long mag = v < 0 ? -v : v;
        if (mag != 1 || e == 0) out += std::to_string(mag);
        if (e != 0) {
            out += 'q';
            if (e != 1) out += '^' + std::to_string(e);
        }
    }
    return out;
}

}  // namespace kh3
