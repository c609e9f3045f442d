#include "braidfloor/braid_io.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

namespace braidfloor {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

// Parses a decimal integer (optional leading '-') starting at pos.
long parse_int(std::string_view text, std::size_t& pos, const char* what) {
    const std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw parse_error(std::string("expected ") + what, start);
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw parse_error(std::string(what) + " out of range", start);
        ++pos;
    }
    return negative ? -value : value;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size() || text[pos] != 'B')
        throw parse_error("expected 'B' introducing the strand count", pos);
    ++pos;
    const long n = parse_int(text, pos, "strand count");
    if (n < 2) throw parse_error("strand count must be at least 2", pos);
    if (pos >= text.size() || text[pos] != ':')
        throw parse_error("expected ':' after strand count", pos);
    ++pos;

    std::vector<Letter> letters;
    for (;;) {
        while (pos < text.size() && is_space(text[pos])) ++pos;
        if (pos >= text.size()) break;
        const std::size_t start = pos;
        const long g = parse_int(text, pos, "generator");
        if (g == 0) throw parse_error("generator must be nonzero", start);
        const long index = g > 0 ? g : -g;
        if (index >= n) throw parse_error("generator index out of range for strand count", start);
        letters.push_back({static_cast<int>(index), g > 0 ? 1 : -1});
    }
    return {static_cast<int>(n), std::move(letters)};
}

std::string to_grammar(const BraidWord& w) {
    std::string out = "B" + std::to_string(w.strands()) + ":";
    for (const Letter& l : w.letters()) {
        out += ' ';
        out += std::to_string(static_cast<long>(l.sign) * l.index);
    }
    return out;
}

std::string to_sigma_string(const BraidWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const Letter& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += "sigma_" + std::to_string(l.index);
        if (l.sign < 0) out += "^-1";
    }
    return out;
}

}  // namespace braidfloor
