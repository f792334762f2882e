#include "kh3/abelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace kh3 {

AbelianGroup free_abelian(long long rank) { return AbelianGroup{rank, {}}; }

AbelianGroup abelian_group(long long rank, std::vector<BigInt> factors) {
    for (const auto& f : factors)
        if (f < 2) throw std::invalid_argument("invariant factors must be >= 2");
    std::sort(factors.begin(), factors.end());
    return AbelianGroup{rank, std::move(factors)};
}

bool is_summand(const AbelianGroup& whole, const AbelianGroup& part) {
    if (part.free_rank > whole.free_rank) return false;
    auto rest = whole.torsion;
    for (const auto& f : part.torsion) {
        auto it = std::find(rest.begin(), rest.end(), f);
        if (it == rest.end()) return false;
        rest.erase(it);
    }
    return true;
}

AbelianGroup complement(const AbelianGroup& whole, const AbelianGroup& part) {
    if (!is_summand(whole, part)) throw std::domain_error("block not a summand");
    AbelianGroup out;
    out.free_rank = whole.free_rank - part.free_rank;
    out.torsion = whole.torsion;
    for (const auto& f : part.torsion)
        out.torsion.erase(std::find(out.torsion.begin(), out.torsion.end(), f));
    return out;
}

std::string render_group(const AbelianGroup& g) {
    if (g.trivial()) return "0";
    std::string out;
    if (g.free_rank == 1)
        out = "Z";
    else if (g.free_rank > 1)
        out = "Z^" + std::to_string(g.free_rank);
    for (const auto& f : g.torsion) {
        if (!out.empty()) out += '+';
        out += "Z/" + f.str();
    }
    return out;
}

}  // namespace kh3
