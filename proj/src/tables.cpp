#include "kh3/tables.hpp"

#include <array>
#include <stdexcept>

namespace kh3 {

namespace {

// cell spec: {i, j, free rank, number of Z/2 factors}
HomologyTable make_table(std::initializer_list<std::array<int, 4>> cells) {
    HomologyTable t;
    for (const auto& c : cells) {
        AbelianGroup g;
        g.free_rank = c[2];
        for (int x = 0; x < c[3]; ++x) g.torsion.push_back(2);
        t.set(c[0], c[1], std::move(g));
    }
    return t;
}

}  // namespace

PartialTable PartialTable::full(HomologyTable t) {
    PartialTable p;
    p.complete = true;
    bool first = true;
    for (const auto& [cell, g] : t.cells) {
        const auto [i, j] = cell;
        if (first || i > p.i_max) p.i_max = i;
        if (first || j < p.j_low) p.j_low = j;
        if (first || j > p.j_max) p.j_max = j;
        first = false;
    }
    p.table = std::move(t);
    return p;
}

const HomologyTable& n_member_table(FamilyTag::NMember m) {
    // closures of the six exceptional braids
    static const HomologyTable trivial = make_table(
        {{0, -3, 1, 0}, {0, -1, 3, 0}, {0, 1, 3, 0}, {0, 3, 1, 0}});
    static const HomologyTable s1 = make_table({{0, -2, 1, 0}, {0, 0, 2, 0}, {0, 2, 1, 0}});
    static const HomologyTable s1s1 = make_table(
        {{0, -1, 1, 0}, {0, 1, 2, 0}, {0, 3, 1, 0}, {2, 3, 1, 0}, {2, 5, 2, 0}, {2, 7, 1, 0}});
    static const HomologyTable s1s2 = make_table({{0, -1, 1, 0}, {0, 1, 1, 0}});
    static const HomologyTable s1s1s2s2 = make_table(
        {{0, 1, 1, 0}, {0, 3, 1, 0}, {2, 5, 2, 0}, {2, 7, 2, 0}, {4, 9, 1, 0}, {4, 11, 1, 0}});
    static const HomologyTable half_twist = make_table(
        {{0, 0, 1, 0}, {0, 2, 1, 0}, {2, 4, 1, 0}, {2, 6, 1, 0}});
    switch (m) {
        case FamilyTag::NMember::Trivial: return trivial;
        case FamilyTag::NMember::Sigma1: return s1;
        case FamilyTag::NMember::Sigma1Sq: return s1s1;
        case FamilyTag::NMember::Sigma1Sigma2: return s1s2;
        case FamilyTag::NMember::Sigma1SqSigma2Sq: return s1s1s2s2;
        case FamilyTag::NMember::Delta: return half_twist;
    }
    throw std::logic_error("unknown N member");
}

int r_length(RWord r) {
    switch (r) {
        case RWord::One: return 0;
        case RWord::Sigma1: return 1;
        case RWord::Sigma1Sigma2: return 2;
    }
    throw std::logic_error("unknown r word");
}

std::string render_rword(RWord r) {
    switch (r) {
        case RWord::One: return "1";
        case RWord::Sigma1: return "s1";
        case RWord::Sigma1Sigma2: return "s1 s2";
    }
    throw std::logic_error("unknown r word");
}

RWord r_of(const NormalForm3& nf) {
    if (nf.p < 0) throw std::domain_error("r_of needs a positive braid");
    // syllable length of the positive word with half twists expanded: any
    // Delta factor already contributes both generators
    if (nf.p == 0 && nf.exponents.empty()) return RWord::One;
    if (nf.p == 0 && nf.exponents.size() == 1) return RWord::Sigma1;
    return RWord::Sigma1Sigma2;
}

const HomologyTable& r_closure_table(RWord r) {
    switch (r) {
        case RWord::One: return n_member_table(FamilyTag::NMember::Trivial);
        case RWord::Sigma1: return n_member_table(FamilyTag::NMember::Sigma1);
        case RWord::Sigma1Sigma2: return n_member_table(FamilyTag::NMember::Sigma1Sigma2);
    }
    throw std::logic_error("unknown r word");
}

const HomologyTable& delta2_closure_table(RWord r) {
    static const HomologyTable d2 =
        make_table({{0, 3, 1, 0}, {0, 5, 1, 0}, {2, 7, 1, 0}, {3, 9, 0, 1},
                    {4, 9, 1, 0}, {3, 11, 1, 0}, {4, 11, 3, 0}, {4, 13, 2, 0}});
    static const HomologyTable d2s1 =
        make_table({{0, 4, 1, 0}, {0, 6, 1, 0}, {2, 8, 1, 0}, {3, 10, 0, 1}, {4, 10, 1, 0},
                    {3, 12, 1, 0}, {4, 12, 2, 0}, {5, 14, 0, 1}, {5, 16, 1, 0}});
    static const HomologyTable d2s1s2 =
        make_table({{0, 5, 1, 0}, {0, 7, 1, 0}, {2, 9, 1, 0}, {3, 11, 0, 1}, {4, 11, 1, 0},
                    {3, 13, 1, 0}, {4, 13, 1, 0}, {5, 15, 1, 0}, {5, 17, 1, 0}});
    switch (r) {
        case RWord::One: return d2;
        case RWord::Sigma1: return d2s1;
        case RWord::Sigma1Sigma2: return d2s1s2;
    }
    throw std::logic_error("unknown r word");
}

namespace {

// the four-column / three-row patterns of the classified families, cells
// relative to the anchor row
HomologyTable c_pattern(TablePattern p) {
    switch (p) {
        case TablePattern::C1:
            return make_table({{0, 0, 1, 0},
                               {0, 2, 2, 0},
                               {0, 4, 1, 0},
                               {2, 4, 1, 0},
                               {2, 6, 1, 0},
                               {3, 6, 0, 1},
                               {3, 8, 1, 1},
                               {3, 10, 1, 0}});
        case TablePattern::C2:
            return make_table({{0, 0, 1, 0},
                               {0, 2, 1, 0},
                               {2, 4, 2, 0},
                               {2, 6, 1, 0},
                               {3, 6, 0, 1},
                               {3, 8, 1, 0}});
        case TablePattern::C3:
            return make_table(
                {{0, 0, 1, 0}, {0, 2, 1, 0}, {2, 4, 2, 0}, {3, 6, 0, 2}, {3, 8, 2, 0}});
        case TablePattern::C4:
            return make_table(
                {{0, 0, 1, 0}, {0, 2, 1, 0}, {2, 4, 1, 0}, {3, 6, 0, 1}, {3, 8, 1, 0}});
        default: throw std::logic_error("not a C pattern");
    }
}

char pattern_label(TablePattern p) {
    switch (p) {
        case TablePattern::C1: return 'W';
        case TablePattern::C2: return 'X';
        case TablePattern::C3: return 'Y';
        case TablePattern::C4: return 'Z';
        default: return 0;
    }
}

long long n_member_length(FamilyTag::NMember m) {
    switch (m) {
        case FamilyTag::NMember::Trivial: return 0;
        case FamilyTag::NMember::Sigma1: return 1;
        case FamilyTag::NMember::Sigma1Sq: return 2;
        case FamilyTag::NMember::Sigma1Sigma2: return 2;
        case FamilyTag::NMember::Sigma1SqSigma2Sq: return 4;
        case FamilyTag::NMember::Delta: return 3;
    }
    throw std::logic_error("unknown N member");
}

}  // namespace

PartialTable lshape_theorem1(const FamilyTag& tag, long long word_length) {
    if (tag.kind == FamilyTag::Kind::N) {
        if (word_length != n_member_length(tag.member))
            throw std::invalid_argument("word length inconsistent with the exceptional braid");
        return PartialTable::full(n_member_table(tag.member));
    }
    TablePattern p;
    switch (tag.kind) {
        case FamilyTag::Kind::C1: p = TablePattern::C1; break;
        case FamilyTag::Kind::C2: p = TablePattern::C2; break;
        case FamilyTag::Kind::C3: p = TablePattern::C3; break;
        default: p = TablePattern::C4; break;  // C4a and C4b share the pattern
    }
    const int j_low = static_cast<int>(word_length) - 3;
    PartialTable out;
    for (const auto& [cell, g] : c_pattern(p).cells)
        out.table.set(cell.first, cell.second + j_low, g);
    out.complete = false;
    out.i_max = 3;
    out.j_low = j_low;
    out.j_max = j_low + 4;
    out.unknown_label = pattern_label(p);
    return out;
}

PartialTable shift(const PartialTable& t, const ShiftSpec& s) {
    PartialTable out;
    out.complete = t.complete;
    out.i_max = t.i_max + s.i_shift;
    out.j_low = t.j_low + s.j_shift;
    out.j_max = t.j_max + s.j_shift;
    out.unknown_label = t.unknown_label;
    for (const auto& [cell, g] : t.table.cells)
        out.table.set(cell.first + s.i_shift, cell.second + s.j_shift, g);
    return out;
}

PartialTable subtract_block(const PartialTable& t, const PartialTable& b) {
    PartialTable out = t;
    for (const auto& [cell, g] : b.table.cells) {
        const auto [i, j] = cell;
        if (!t.determined(i, j))
            throw std::domain_error("block cell outside the determined region");
        out.table.set(i, j, complement(out.table.group(i, j), g));
    }
    return out;
}

namespace {

HomologyTable merge_disjoint(const HomologyTable& a, const HomologyTable& b) {
    HomologyTable out = a;
    for (const auto& [cell, g] : b.cells) {
        if (!out.group(cell.first, cell.second).trivial())
            throw std::logic_error("overlapping blocks in table merge");
        out.set(cell.first, cell.second, g);
    }
    return out;
}

}  // namespace

PartialTable jaeger_step(const PartialTable& t, long long word_length, RWord r) {
    const int sh = static_cast<int>(word_length) - r_length(r);
    const PartialTable removed = shift(PartialTable::full(r_closure_table(r)), {0, sh});
    const PartialTable rest = subtract_block(t, removed);
    const PartialTable base = shift(PartialTable::full(delta2_closure_table(r)), {0, sh});
    const PartialTable moved = shift(rest, {4, 12});

    PartialTable out;
    out.table = merge_disjoint(base.table, moved.table);
    if (t.complete) return PartialTable::full(std::move(out.table));
    out.complete = false;
    out.i_max = t.i_max + 4;
    out.j_low = t.j_low + 6;
    out.j_max = t.j_max + 12;
    out.unknown_label = t.unknown_label;
    if (base.j_low != out.j_low)
        throw std::logic_error("base block anchored off the expected bottom row");
    return out;
}

PartialTable extended_shape(const NormalForm3& nf) {
    if (nf.p < 0) throw NotPositiveError();
    {
        const auto check = conjugate_to_lambda(nf);
        if (!(check.cls.rep == nf))
            throw std::invalid_argument("extended_shape needs a Lambda representative");
    }
    const long long q = nf.p / 2;
    NormalForm3 gamma = nf;
    gamma.p = nf.p - 2 * q;

    const FamilyTag tag = classify_family(gamma);
    long long length = 3 * gamma.p + gamma.letter_sum();
    PartialTable cur = lshape_theorem1(tag, length);
    long long cur_p = gamma.p;
    for (long long step = 0; step < q; ++step) {
        NormalForm3 stage = gamma;
        stage.p = cur_p;
        cur = jaeger_step(cur, length, r_of(stage));
        length += 6;
        cur_p += 2;
    }
    return cur;
}

std::optional<std::pair<int, int>> first_disagreement(const PartialTable& partial,
                                                      const HomologyTable& full) {
    for (const auto& [cell, g] : partial.table.cells)
        if (!(full.group(cell.first, cell.second) == g)) return cell;
    for (const auto& [cell, g] : full.cells) {
        const auto [i, j] = cell;
        if (partial.determined(i, j) && !(partial.table.group(i, j) == g)) return cell;
    }
    return std::nullopt;
}

std::string render_pattern(TablePattern p) {
    switch (p) {
        case TablePattern::NTrivial: return "N(1)";
        case TablePattern::NSigma1: return "N(s1)";
        case TablePattern::NSigma1Sq: return "N(s1^2)";
        case TablePattern::NSigma1Sigma2: return "N(s1 s2)";
        case TablePattern::NSigma1SqSigma2Sq: return "N(s1^2 s2^2)";
        case TablePattern::NDelta: return "N(D)";
        case TablePattern::C1: return "C1";
        case TablePattern::C2: return "C2";
        case TablePattern::C3: return "C3";
        case TablePattern::C4: return "C4";
    }
    return "?";
}

ObstructionVerdict matches_positive3(const HomologyTable& t) {
    ObstructionVerdict out;
    static const std::pair<FamilyTag::NMember, TablePattern> n_members[] = {
        {FamilyTag::NMember::Trivial, TablePattern::NTrivial},
        {FamilyTag::NMember::Sigma1, TablePattern::NSigma1},
        {FamilyTag::NMember::Sigma1Sq, TablePattern::NSigma1Sq},
        {FamilyTag::NMember::Sigma1Sigma2, TablePattern::NSigma1Sigma2},
        {FamilyTag::NMember::Sigma1SqSigma2Sq, TablePattern::NSigma1SqSigma2Sq},
        {FamilyTag::NMember::Delta, TablePattern::NDelta},
    };
    for (const auto& [member, pattern] : n_members)
        if (t == n_member_table(member)) {
            out.pattern = pattern;
            out.j_low = PartialTable::full(t).j_low;
            return out;
        }

    if (t.cells.empty()) {
        out.witness = {{0, 0}};
        return out;
    }
    int j_low = t.cells.begin()->second.trivial() ? 0 : t.cells.begin()->first.second;
    for (const auto& [cell, g] : t.cells)
        if (cell.second < j_low) j_low = cell.second;

    for (TablePattern p : {TablePattern::C1, TablePattern::C2, TablePattern::C3,
                           TablePattern::C4}) {
        PartialTable pat;
        for (const auto& [cell, g] : c_pattern(p).cells)
            pat.table.set(cell.first, cell.second + j_low, g);
        pat.i_max = 3;
        pat.j_low = j_low;
        pat.j_max = j_low + 4;
        const auto mismatch = first_disagreement(pat, t);
        if (!mismatch) {
            out.pattern = p;
            out.j_low = j_low;
            return out;
        }
        if (p == TablePattern::C4) out.witness = mismatch;
    }
    out.j_low = j_low;
    return out;
}

}  // namespace kh3
