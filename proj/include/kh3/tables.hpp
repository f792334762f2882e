#pragma once

#include <optional>

#include "kh3/conjugacy.hpp"
#include "kh3/khovanov.hpp"

namespace kh3 {

// Partially known homology table. Inside the determined region, absence of a
// cell asserts the group is trivial; outside it asserts nothing. A cell (i,j)
// is determined iff the table is complete, or i <= i_max, or j <= j_max
// (everything below j_low, the lowest potentially-nonzero row, is zero).
struct PartialTable {
    HomologyTable table;
    bool complete = false;
    int i_max = 0;
    int j_low = 0;
    int j_max = 0;
    char unknown_label = 0;  // residual block label W/X/Y/Z, 0 when none

    bool determined(int i, int j) const { return complete || i <= i_max || j <= j_max; }
    static PartialTable full(HomologyTable t);

    friend bool operator==(const PartialTable&, const PartialTable&) = default;
};

struct ShiftSpec {
    int i_shift = 0, j_shift = 0;
};

// (i,j) -> (i + i_shift, j + j_shift) on cells and region alike.
PartialTable shift(const PartialTable& t, const ShiftSpec& s);

// Cellwise direct-sum complement of b inside t. Every cell of b must lie in
// t's determined region and embed as a summand; violations throw
// std::domain_error ("block not a summand" would falsify the step theorem).
PartialTable subtract_block(const PartialTable& t, const PartialTable& b);

// Closed-form homology of the six exceptional closures.
const HomologyTable& n_member_table(FamilyTag::NMember m);

// Reduction word of the column-removal step: 1, s1, or s1 s2.
enum class RWord { One, Sigma1, Sigma1Sigma2 };
int r_length(RWord r);
std::string render_rword(RWord r);

// r from the syllable length of the positive word (half twists expanded).
RWord r_of(const NormalForm3& nf);

// Homology of the closure of r itself, and of Delta^2 r.
const HomologyTable& r_closure_table(RWord r);
const HomologyTable& delta2_closure_table(RWord r);

// The partial table of the closure determined by the conjugacy family:
// complete tables for N members, otherwise the four-column three-row pattern
// anchored at j_low = word_length - 3 with the residual block labelled.
PartialTable lshape_theorem1(const FamilyTag& tag, long long word_length);

// Transport from the closure of w (table t, length l) to the closure of
// Delta^2 w: remove the first-column block H(r-closure){l - l(r)}, add the
// complete H(Delta^2 r-closure){l - l(r)}, and glue the remainder shifted by
// [4]{12}. The determined region gains 4 columns and 3 rows.
PartialTable jaeger_step(const PartialTable& t, long long word_length, RWord r);

// Iterated construction for a Lambda representative with infimum p >= 0:
// seed with the table of Delta^{p mod 2} times the syllable tail, then apply
// floor(p/2) column-removal steps.
PartialTable extended_shape(const NormalForm3& lambda_rep);

// First mismatch between a partial table and a full table on the determined
// region; nullopt when they agree there.
std::optional<std::pair<int, int>> first_disagreement(const PartialTable& partial,
                                                      const HomologyTable& full);

enum class TablePattern {
    NTrivial,
    NSigma1,
    NSigma1Sq,
    NSigma1Sigma2,
    NSigma1SqSigma2Sq,
    NDelta,
    C1,
    C2,
    C3,
    C4,
};
std::string render_pattern(TablePattern p);

struct ObstructionVerdict {
    std::optional<TablePattern> pattern;  // set iff compatible
    int j_low = 0;
    std::optional<std::pair<int, int>> witness;  // a violating cell when incompatible
    bool compatible() const { return pattern.has_value(); }
};

// Tests a full homology table against the closed positive 3-braid shapes:
// exact equality for the N members, pattern agreement on the determined
// region for C1-C4 at the admissible anchor row.
ObstructionVerdict matches_positive3(const HomologyTable& t);

}  // namespace kh3
