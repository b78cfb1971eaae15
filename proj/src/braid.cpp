#include "sqp/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "sqp/errors.hpp"

namespace sqp {

namespace {

void check_strands(int strands) {
    if (strands < 1) {
        throw InputError("strand count must be at least 1, got " + std::to_string(strands));
    }
}

struct Token {
    std::string_view text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        tokens.push_back({text.substr(start, pos - start), start});
    }
    return tokens;
}

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

BandWord::BandWord(int strands, std::vector<Band> letters)
    : strands_(strands), letters_(std::move(letters)) {
    check_strands(strands_);
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        const Band& b = letters_[k];
        if (b.i < 1 || b.i >= b.j || b.j > strands_) {
            throw InputError("band letter " + std::to_string(k + 1) + " is (" + std::to_string(b.i) +
                             "," + std::to_string(b.j) + "); need 1 <= i < j <= " +
                             std::to_string(strands_));
        }
    }
}

ArtinWord::ArtinWord(int strands, std::vector<Generator> letters)
    : strands_(strands), letters_(std::move(letters)) {
    check_strands(strands_);
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        const Generator& g = letters_[k];
        if (g.index < 1 || g.index >= strands_ || (g.sign != 1 && g.sign != -1)) {
            throw InputError("Artin letter " + std::to_string(k + 1) + " out of range for B_" +
                             std::to_string(strands_));
        }
    }
}

int ArtinWord::writhe() const {
    int w = 0;
    for (const auto& g : letters_) w += g.sign;
    return w;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size() + 1, false);
    for (int v : image_) {
        if (v < 1 || v > static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw InputError("not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> result;
    std::vector<bool> seen(image_.size() + 1, false);
    for (int start = 1; start <= size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        for (int p = start; !seen[static_cast<std::size_t>(p)]; p = (*this)(p)) {
            seen[static_cast<std::size_t>(p)] = true;
            cycle.push_back(p);
        }
        result.push_back(std::move(cycle));
    }
    return result;
}

BandWord parse_band_word(std::string_view text, int strands) {
    check_strands(strands);
    std::vector<Band> letters;
    auto tokens = tokenize(text);
    for (std::size_t t = 0; t < tokens.size(); ++t) {
        std::string_view tok = tokens[t].text;
        const std::size_t off = tokens[t].offset;
        if (tok.size() < 6 || tok.substr(0, 2) != "b(" || tok.back() != ')') {
            throw ParseError("malformed band token '" + std::string(tok) + "', expected b(i,j)", t, off);
        }
        std::string_view inner = tok.substr(2, tok.size() - 3);
        auto comma = inner.find(',');
        Band b;
        if (comma == std::string_view::npos || !parse_int(inner.substr(0, comma), b.i) ||
            !parse_int(inner.substr(comma + 1), b.j)) {
            throw ParseError("malformed band token '" + std::string(tok) + "', expected b(i,j)", t, off);
        }
        if (b.i < 1 || b.i >= b.j) {
            throw ParseError("band " + std::string(tok) + " needs 1 <= i < j", t, off);
        }
        if (b.j > strands) {
            throw ParseError("band " + std::string(tok) + " exceeds " + std::to_string(strands) + " strands",
                             t, off);
        }
        letters.push_back(b);
    }
    return BandWord(strands, std::move(letters));
}

std::string to_string(const BandWord& word) {
    std::ostringstream out;
    for (std::size_t k = 0; k < word.length(); ++k) {
        if (k) out << ' ';
        out << "b(" << word[k].i << ',' << word[k].j << ')';
    }
    return out.str();
}

ArtinWord parse_artin_word(std::string_view text, int strands) {
    check_strands(strands);
    std::vector<Generator> letters;
    auto tokens = tokenize(text);
    for (std::size_t t = 0; t < tokens.size(); ++t) {
        std::string_view tok = tokens[t].text;
        Generator g;
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S') || !parse_int(tok.substr(1), g.index)) {
            throw ParseError("malformed Artin token '" + std::string(tok) + "', expected s<k> or S<k>", t,
                             tokens[t].offset);
        }
        g.sign = tok[0] == 's' ? 1 : -1;
        if (g.index < 1 || g.index >= strands) {
            throw ParseError("generator " + std::string(tok) + " out of range for B_" + std::to_string(strands),
                             t, tokens[t].offset);
        }
        letters.push_back(g);
    }
    return ArtinWord(strands, std::move(letters));
}

std::string to_string(const ArtinWord& word) {
    std::ostringstream out;
    for (std::size_t k = 0; k < word.length(); ++k) {
        if (k) out << ' ';
        out << (word[k].sign > 0 ? 's' : 'S') << word[k].index;
    }
    return out.str();
}

ArtinWord expand_to_artin(const BandWord& word) {
    std::vector<Generator> out;
    for (const Band& b : word.letters()) {
        for (int k = b.i; k <= b.j - 2; ++k) out.push_back({k, 1});
        out.push_back({b.j - 1, 1});
        for (int k = b.j - 2; k >= b.i; --k) out.push_back({k, -1});
    }
    return ArtinWord(word.strands(), std::move(out));
}

namespace {

// at[p] = strand currently at position p. Returns where each strand ends.
template <typename Swap>
Permutation track(int n, Swap&& for_each_swap) {
    std::vector<int> at(static_cast<std::size_t>(n) + 1);
    std::iota(at.begin(), at.end(), 0);
    for_each_swap([&](int a, int b) { std::swap(at[static_cast<std::size_t>(a)], at[static_cast<std::size_t>(b)]); });
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) image[static_cast<std::size_t>(at[static_cast<std::size_t>(p)] - 1)] = p;
    return Permutation(std::move(image));
}

}  // namespace

Permutation underlying_permutation(const BandWord& word) {
    return track(word.strands(), [&](auto&& swap) {
        for (const Band& b : word.letters()) swap(b.i, b.j);
    });
}

Permutation underlying_permutation(const ArtinWord& word) {
    return track(word.strands(), [&](auto&& swap) {
        for (const Generator& g : word.letters()) swap(g.index, g.index + 1);
    });
}

BandWord shift(const BandWord& word, int offset, int new_strands) {
    if (offset < 0 || offset + word.strands() > new_strands) {
        throw InputError("shift by " + std::to_string(offset) + " does not fit " + std::to_string(word.strands()) +
                         " strands into " + std::to_string(new_strands));
    }
    std::vector<Band> letters;
    letters.reserve(word.length());
    for (const Band& b : word.letters()) letters.push_back({b.i + offset, b.j + offset});
    return BandWord(new_strands, std::move(letters));
}

}  // namespace sqp
