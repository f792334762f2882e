#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kh3/braid.hpp"

namespace kh3 {

enum class Label : uint8_t { A, B };
using State = std::vector<Label>;

// A state plus a +/- sign per circle of the smoothed diagram; circles are
// numbered by ascending smallest incident arc id.
struct EnhancedState {
    State state;
    std::vector<int8_t> circle_signs;
};

// Crossing ports in the local frame. Strands pass through NW<->SE and
// NE<->SW; a smoothing joins the ports pairwise either vertically
// (NW-SW, NE-SE) or horizontally (NW-NE, SW-SE).
enum Port { kNW = 0, kNE = 1, kSW = 2, kSE = 3 };

struct Transit {
    int component = 0;
    bool downward = true;  // strand traverses top ports -> bottom ports
};

struct Crossing {
    std::array<int, 4> arc{};     // incident arc id per port
    bool positive_letter = true;  // chirality: sigma_i if true, sigma_i^{-1} if false
    int sign = 1;                 // orientation-derived crossing sign
    std::array<Transit, 2> transit{};  // [0] = NW-SE strand, [1] = NE-SW strand
};

// For a sigma_i-type crossing the A-smoothing is the vertical one; for a
// sigma_i^{-1}-type crossing it is the horizontal one.
inline bool smoothing_is_vertical(const Crossing& x, Label l) {
    return x.positive_letter == (l == Label::A);
}

class LinkDiagram {
public:
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int arc_count() const { return arc_count_; }
    int component_count() const { return component_count_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const Crossing& crossing(int i) const { return crossings_[static_cast<size_t>(i)]; }

    int positive_crossings() const { return positive_; }
    int negative_crossings() const { return negative_; }
    int writhe() const { return positive_ - negative_; }

private:
    std::vector<Crossing> crossings_;
    int arc_count_ = 0;
    int component_count_ = 0;
    int positive_ = 0, negative_ = 0;

    friend class DiagramBuilder;
    friend LinkDiagram permute_crossings(const LinkDiagram&, const std::vector<int>&);
    friend LinkDiagram reorient_component(const LinkDiagram&, int);
};

// Standard rational diagram data: a list of twist-box sizes (signs give the
// twist chirality). Zeros are permitted pre-normalization.
struct RationalCode {
    std::vector<long long> entries;
    friend bool operator==(const RationalCode&, const RationalCode&) = default;
};

RationalCode parse_code(const std::string& csv);  // "2,-1,3"
std::string render_code(const RationalCode& code);

// Closure of a braid word: crossings in letter order, all strands oriented
// downward, so every crossing's sign equals its letter sign.
LinkDiagram from_braid_closure(const BraidWord& w);

// Standard rational diagram built as a 4-plat of twist boxes (odd boxes on
// the middle strand pair, even boxes on the outer pair, closure pattern by
// the parity of the box count). Each component is oriented starting from its
// lowest-numbered arc. Throws on an empty code; zero entries are allowed and
// contribute no crossings.
LinkDiagram from_rational_code(const RationalCode& code);

// Circle structure of a smoothed diagram.
struct Smoothing {
    int circles = 0;
    std::vector<int> arc_circle;  // arc id -> circle id (canonical numbering)
};
Smoothing smooth(const LinkDiagram& d, uint64_t state_bits);  // bit k set <=> B at k
Smoothing smooth(const LinkDiagram& d, const State& s);

int circle_count(const LinkDiagram& d, const State& s);

// (j_min, j_max) = (c - 3n - |s_A D|, -c + 3p + |s_B D|).
std::pair<int, int> j_bounds(const LinkDiagram& d);

// True iff no crossing's A-smoothing has both of its arcs on one circle of s_A D.
bool is_A_adequate(const LinkDiagram& d);

int component_count(const LinkDiagram& d);

// Same diagram with crossings renumbered: crossing t of the result is
// crossing perm[t] of the input.
LinkDiagram permute_crossings(const LinkDiagram& d, const std::vector<int>& perm);

// Reverses the orientation of one component and recomputes crossing signs.
LinkDiagram reorient_component(const LinkDiagram& d, int component);

// PD-style interchange text: one crossing per line,
//   <arc NW> <arc NE> <arc SW> <arc SE> <over: 0|1> <sign: +1|-1>
// where over = 1 means the NW-SE strand is the over-strand.
std::string pd_code(const LinkDiagram& d);

State all_A_state(const LinkDiagram& d);
State all_B_state(const LinkDiagram& d);

}  // namespace kh3
