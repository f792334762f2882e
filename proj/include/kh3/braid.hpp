#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kh3 {

// One Artin generator or its inverse: sigma_{index}^{sign}.
struct BraidLetter {
    int index = 1;  // 1 <= index <= strands-1
    int sign = 1;   // +1 or -1
    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// A word in the Artin generators of the braid group on `strands` strands.
// The empty word is the identity braid.
struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Grammar: whitespace-separated tokens, each either `s<i>` or `s<i>^<e>`
// (integer e != 0, |e| letters emitted), or a run of compact letters
//   a = s1, b = s2, A = s1^-1, B = s2^-1, D = s1 s2 s1 (half twist).
// Compact letters are only valid with strands == 3, and D expands at parse
// time so downstream code never sees a half-twist token.
// Throws std::invalid_argument on malformed input.
BraidWord parse_word(std::string_view text, int strands);

// Renders back to `s<i>^<e>` tokens with maximal run compression.
std::string render_word(const BraidWord& w);

int word_length(const BraidWord& w);      // letter count, inverses count as 1
int syllable_length(const BraidWord& w);  // maximal runs of one signed generator
int exponent_sum(const BraidWord& w);     // sum of letter signs (writhe of the closure)

BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);

}  // namespace kh3
