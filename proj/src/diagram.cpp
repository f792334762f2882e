#include "kh3/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace kh3 {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// canonical relabeling: classes numbered by ascending smallest member
std::vector<int> compact_labels(Dsu& dsu, int n, int& classes) {
    std::vector<int> label(static_cast<size_t>(n), -1);
    classes = 0;
    for (int i = 0; i < n; ++i) {
        const int r = dsu.find(i);
        if (label[static_cast<size_t>(r)] < 0) label[static_cast<size_t>(r)] = classes++;
    }
    std::vector<int> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = label[static_cast<size_t>(dsu.find(i))];
    return out;
}

int through_port(int p) {
    switch (p) {
        case kNW: return kSE;
        case kNE: return kSW;
        case kSW: return kNE;
        default: return kNW;
    }
}

}  // namespace

class DiagramBuilder {
public:
    int new_arc() {
        ports_.emplace_back();
        return next_arc_++;
    }

    // new crossing whose top ports consume the given arcs and whose bottom
    // ports open fresh ones
    int add_crossing(int nw, int ne, bool positive_letter) {
        const int id = static_cast<int>(crossings_.size());
        Crossing x;
        x.arc = {nw, ne, new_arc(), new_arc()};
        x.positive_letter = positive_letter;
        crossings_.push_back(x);
        for (int p = 0; p < 4; ++p)
            ports_[static_cast<size_t>(x.arc[static_cast<size_t>(p)])].push_back({id, p});
        return id;
    }

    void join(int arc_a, int arc_b) { joins_.emplace_back(arc_a, arc_b); }

    const Crossing& crossing(int id) const { return crossings_[static_cast<size_t>(id)]; }

    LinkDiagram finish(bool force_downward);

private:
    int next_arc_ = 0;
    std::vector<Crossing> crossings_;
    std::vector<std::vector<std::pair<int, int>>> ports_;  // provisional arc -> (crossing, port)
    std::vector<std::pair<int, int>> joins_;
};

// Merges joined arcs, relabels arcs canonically, traces every component
// (recording transit directions per crossing), and derives crossing signs.
LinkDiagram DiagramBuilder::finish(bool force_downward) {
    Dsu dsu(next_arc_);
    for (auto [a, b] : joins_) dsu.unite(a, b);
    int arc_classes = 0;
    const std::vector<int> label = compact_labels(dsu, next_arc_, arc_classes);

    LinkDiagram d;
    d.crossings_ = crossings_;
    d.arc_count_ = arc_classes;
    for (auto& x : d.crossings_)
        for (auto& a : x.arc) a = label[static_cast<size_t>(a)];

    // endpoint list per final arc, deterministic construction order
    std::vector<std::vector<std::pair<int, int>>> ends(static_cast<size_t>(arc_classes));
    for (int a = 0; a < next_arc_; ++a)
        for (auto& e : ports_[static_cast<size_t>(a)])
            ends[static_cast<size_t>(label[static_cast<size_t>(a)])].push_back(e);
    for (auto& e : ends)
        if (e.size() != 0 && e.size() != 2)
            throw std::logic_error("arc with endpoint count other than 0 or 2");

    // Trace components. Each starts at its lowest arc id and leaves through
    // that arc's first endpoint; every arc end is traversed exactly once.
    std::vector<char> visited(static_cast<size_t>(arc_classes), 0);
    int comp = 0;
    for (int a0 = 0; a0 < arc_classes; ++a0) {
        if (visited[static_cast<size_t>(a0)]) continue;
        visited[static_cast<size_t>(a0)] = 1;
        const auto& a0_ends = ends[static_cast<size_t>(a0)];
        if (!a0_ends.empty()) {
            int cx = a0_ends[0].first, cp = a0_ends[0].second;
            for (;;) {
                // entering crossing cx through port cp
                Crossing& x = d.crossings_[static_cast<size_t>(cx)];
                const size_t slot = (cp == kNW || cp == kSE) ? 0 : 1;
                x.transit[slot] = {comp, cp == kNW || cp == kNE};
                const int out_port = through_port(cp);
                const int next_arc = x.arc[static_cast<size_t>(out_port)];
                visited[static_cast<size_t>(next_arc)] = 1;
                const std::pair<int, int> in_end{cx, out_port};
                if (next_arc == a0) {
                    if (in_end != a0_ends[1])
                        throw std::logic_error("component trace did not close up");
                    break;
                }
                const auto& e = ends[static_cast<size_t>(next_arc)];
                const auto other = (e[0] == in_end) ? e[1] : e[0];
                cx = other.first;
                cp = other.second;
            }
        }
        ++comp;
    }
    d.component_count_ = comp;

    if (force_downward)
        for (auto& x : d.crossings_) {
            x.transit[0].downward = true;
            x.transit[1].downward = true;
        }

    for (auto& x : d.crossings_) {
        const int letter_sign = x.positive_letter ? 1 : -1;
        x.sign = x.transit[0].downward == x.transit[1].downward ? letter_sign : -letter_sign;
        (x.sign > 0 ? d.positive_ : d.negative_)++;
    }
    return d;
}

LinkDiagram from_braid_closure(const BraidWord& w) {
    const int n = w.strands;
    DiagramBuilder b;
    std::vector<int> top(static_cast<size_t>(n)), open(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s)
        top[static_cast<size_t>(s)] = open[static_cast<size_t>(s)] = b.new_arc();
    for (const auto& l : w.letters) {
        const int i = l.index - 1;
        if (i < 0 || i + 1 >= n) throw std::invalid_argument("letter index out of range");
        const int id = b.add_crossing(open[static_cast<size_t>(i)],
                                      open[static_cast<size_t>(i + 1)], l.sign > 0);
        open[static_cast<size_t>(i)] = b.crossing(id).arc[kSW];
        open[static_cast<size_t>(i + 1)] = b.crossing(id).arc[kSE];
    }
    for (int s = 0; s < n; ++s)
        b.join(open[static_cast<size_t>(s)], top[static_cast<size_t>(s)]);
    return b.finish(/*force_downward=*/true);
}

LinkDiagram from_rational_code(const RationalCode& code) {
    if (code.entries.empty()) throw std::invalid_argument("empty rational code");
    const size_t m = code.entries.size();
    DiagramBuilder b;
    std::array<int, 4> top{}, open{};
    for (int s = 0; s < 4; ++s)
        top[static_cast<size_t>(s)] = open[static_cast<size_t>(s)] = b.new_arc();
    b.join(top[0], top[1]);  // top bridges
    b.join(top[2], top[3]);

    for (size_t t = 0; t < m; ++t) {
        const long long a = code.entries[t];
        const bool odd_box = t % 2 == 0;  // boxes counted from 1
        const int left = odd_box ? 1 : 0;
        for (long long r = 0; r < (a >= 0 ? a : -a); ++r) {
            const int id = b.add_crossing(open[static_cast<size_t>(left)],
                                          open[static_cast<size_t>(left + 1)], a > 0);
            open[static_cast<size_t>(left)] = b.crossing(id).arc[kSW];
            open[static_cast<size_t>(left + 1)] = b.crossing(id).arc[kSE];
        }
    }
    if (m % 2 == 1) {  // closure pattern by box-count parity
        b.join(open[0], open[1]);
        b.join(open[2], open[3]);
    } else {
        b.join(open[1], open[2]);
        b.join(open[3], open[0]);
    }
    return b.finish(/*force_downward=*/false);
}

Smoothing smooth(const LinkDiagram& d, uint64_t state_bits) {
    if (d.crossing_count() > 63) throw std::invalid_argument("too many crossings for state mask");
    Dsu dsu(d.arc_count());
    for (int k = 0; k < d.crossing_count(); ++k) {
        const Crossing& x = d.crossing(k);
        const Label l = (state_bits >> k) & 1u ? Label::B : Label::A;
        if (smoothing_is_vertical(x, l)) {
            dsu.unite(x.arc[kNW], x.arc[kSW]);
            dsu.unite(x.arc[kNE], x.arc[kSE]);
        } else {
            dsu.unite(x.arc[kNW], x.arc[kNE]);
            dsu.unite(x.arc[kSW], x.arc[kSE]);
        }
    }
    Smoothing s;
    s.arc_circle = compact_labels(dsu, d.arc_count(), s.circles);
    return s;
}

Smoothing smooth(const LinkDiagram& d, const State& st) {
    if (static_cast<int>(st.size()) != d.crossing_count())
        throw std::invalid_argument("state length must equal crossing count");
    uint64_t bits = 0;
    for (size_t k = 0; k < st.size(); ++k)
        if (st[k] == Label::B) bits |= uint64_t{1} << k;
    return smooth(d, bits);
}

int circle_count(const LinkDiagram& d, const State& s) { return smooth(d, s).circles; }

std::pair<int, int> j_bounds(const LinkDiagram& d) {
    const int c = d.crossing_count();
    const int sa = smooth(d, uint64_t{0}).circles;
    const int sb = smooth(d, (uint64_t{1} << c) - 1).circles;
    return {c - 3 * d.negative_crossings() - sa, -c + 3 * d.positive_crossings() + sb};
}

bool is_A_adequate(const LinkDiagram& d) {
    const Smoothing sa = smooth(d, uint64_t{0});
    for (const auto& x : d.crossings()) {
        const bool vertical = smoothing_is_vertical(x, Label::A);
        const int c1 = sa.arc_circle[static_cast<size_t>(x.arc[kNW])];
        const int c2 = sa.arc_circle[static_cast<size_t>(vertical ? x.arc[kNE] : x.arc[kSW])];
        if (c1 == c2) return false;
    }
    return true;
}

int component_count(const LinkDiagram& d) { return d.component_count(); }

LinkDiagram permute_crossings(const LinkDiagram& d, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != d.crossing_count())
        throw std::invalid_argument("permutation size mismatch");
    LinkDiagram out = d;
    for (size_t t = 0; t < perm.size(); ++t)
        out.crossings_[t] = d.crossings_[static_cast<size_t>(perm[t])];
    return out;
}

LinkDiagram reorient_component(const LinkDiagram& d, int component) {
    LinkDiagram out = d;
    out.positive_ = out.negative_ = 0;
    for (auto& x : out.crossings_) {
        for (auto& t : x.transit)
            if (t.component == component) t.downward = !t.downward;
        const int letter_sign = x.positive_letter ? 1 : -1;
        x.sign = x.transit[0].downward == x.transit[1].downward ? letter_sign : -letter_sign;
        (x.sign > 0 ? out.positive_ : out.negative_)++;
    }
    return out;
}

std::string pd_code(const LinkDiagram& d) {
    std::string out;
    for (const auto& x : d.crossings()) {
        for (int p = 0; p < 4; ++p) {
            out += std::to_string(x.arc[static_cast<size_t>(p)]);
            out += ' ';
        }
        out += x.positive_letter ? "1 " : "0 ";
        out += x.sign > 0 ? "+1" : "-1";
        out += '\n';
    }
    return out;
}

State all_A_state(const LinkDiagram& d) {
    return State(static_cast<size_t>(d.crossing_count()), Label::A);
}
State all_B_state(const LinkDiagram& d) {
    return State(static_cast<size_t>(d.crossing_count()), Label::B);
}

RationalCode parse_code(const std::string& csv) {
    RationalCode code;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        std::string tok = csv.substr(pos, comma - pos);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
            tok.erase(tok.begin());
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
            tok.pop_back();
        if (!tok.empty()) {
            long long v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw std::invalid_argument("bad rational code entry '" + tok + "'");
            code.entries.push_back(v);
        } else if (comma != csv.size() || pos != 0) {
            throw std::invalid_argument("empty rational code entry");
        }
        if (comma == csv.size()) break;
        pos = comma + 1;
    }
    return code;
}

std::string render_code(const RationalCode& code) {
    std::string out;
    for (size_t i = 0; i < code.entries.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(code.entries[i]);
    }
    return out;
}

}  // namespace kh3
