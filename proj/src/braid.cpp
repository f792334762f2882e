#include "kh3/braid.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace kh3 {

namespace {

[[noreturn]] void bad_token(std::string_view tok, const char* why) {
    throw std::invalid_argument("bad braid token '" + std::string(tok) + "': " + why);
}

long long parse_int(std::string_view s, std::string_view tok, const char* what) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) bad_token(tok, what);
    return v;
}

void append_run(BraidWord& w, int index, long long exponent, std::string_view tok) {
    if (exponent == 0) bad_token(tok, "zero exponent");
    if (index < 1 || index > w.strands - 1) bad_token(tok, "generator index out of range");
    const int sign = exponent > 0 ? 1 : -1;
    for (long long r = 0; r < (exponent > 0 ? exponent : -exponent); ++r)
        w.letters.push_back({index, sign});
}

void parse_token(BraidWord& w, std::string_view tok) {
    if (tok.size() >= 2 && tok[0] == 's' && std::isdigit(static_cast<unsigned char>(tok[1]))) {
        const auto caret = tok.find('^');
        if (caret == std::string_view::npos) {
            append_run(w, static_cast<int>(parse_int(tok.substr(1), tok, "bad index")), 1, tok);
        } else {
            const int idx = static_cast<int>(parse_int(tok.substr(1, caret - 1), tok, "bad index"));
            append_run(w, idx, parse_int(tok.substr(caret + 1), tok, "bad exponent"), tok);
        }
        return;
    }
    // compact alphabet
    bool compact_shape = true;
    for (char c : tok)
        if (c != 'a' && c != 'b' && c != 'A' && c != 'B' && c != 'D') compact_shape = false;
    if (!compact_shape) bad_token(tok, "unrecognized token");
    if (w.strands != 3) bad_token(tok, "compact alphabet requires 3 strands");
    for (char c : tok) {
        switch (c) {
            case 'a': w.letters.push_back({1, 1}); break;
            case 'b': w.letters.push_back({2, 1}); break;
            case 'A': w.letters.push_back({1, -1}); break;
            case 'B': w.letters.push_back({2, -1}); break;
            case 'D':
                w.letters.push_back({1, 1});
                w.letters.push_back({2, 1});
                w.letters.push_back({1, 1});
                break;
        }
    }
}

}  // namespace

BraidWord parse_word(std::string_view text, int strands) {
    if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
    BraidWord w;
    w.strands = strands;
    size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        parse_token(w, text.substr(pos, end - pos));
        pos = end;
    }
    return w;
}

std::string render_word(const BraidWord& w) {
    std::string out;
    size_t i = 0;
    while (i < w.letters.size()) {
        size_t run = 1;
        while (i + run < w.letters.size() && w.letters[i + run] == w.letters[i]) ++run;
        if (!out.empty()) out += ' ';
        out += 's';
        out += std::to_string(w.letters[i].index);
        const long long e = static_cast<long long>(run) * w.letters[i].sign;
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
        i += run;
    }
    return out;
}

int word_length(const BraidWord& w) { return static_cast<int>(w.letters.size()); }

int syllable_length(const BraidWord& w) {
    int runs = 0;
    for (size_t i = 0; i < w.letters.size(); ++i)
        if (i == 0 || !(w.letters[i] == w.letters[i - 1])) ++runs;
    return runs;
}

int exponent_sum(const BraidWord& w) {
    int s = 0;
    for (const auto& l : w.letters) s += l.sign;
    return s;
}

BraidWord inverse(const BraidWord& w) {
    BraidWord r;
    r.strands = w.strands;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back({it->index, -it->sign});
    return r;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch in concat");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

}  // namespace kh3
