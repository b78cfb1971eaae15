#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sqp {

// Positive band generator sigma_{i,j}, 1 <= i < j <= strands.
struct Band {
    int i = 1;
    int j = 2;

    friend bool operator==(const Band&, const Band&) = default;
};

// A strongly quasipositive braid word: a strand count and a sequence of
// positive band generators. Inverse letters cannot be represented.
class BandWord {
public:
    explicit BandWord(int strands, std::vector<Band> letters = {});

    int strands() const { return strands_; }
    const std::vector<Band>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Band& operator[](std::size_t k) const { return letters_[k]; }

    friend bool operator==(const BandWord&, const BandWord&) = default;

private:
    int strands_;
    std::vector<Band> letters_;
};

// Signed Artin generator sigma_index^sign.
struct Generator {
    int index = 1;
    int sign = 1;

    friend bool operator==(const Generator&, const Generator&) = default;
};

class ArtinWord {
public:
    explicit ArtinWord(int strands, std::vector<Generator> letters = {});

    int strands() const { return strands_; }
    const std::vector<Generator>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Generator& operator[](std::size_t k) const { return letters_[k]; }
    int writhe() const;

    friend bool operator==(const ArtinWord&, const ArtinWord&) = default;

private:
    int strands_;
    std::vector<Generator> letters_;
};

// Permutation of {1..n}. image(p) is where the strand entering at position p
// leaves the braid; the cycles are the components of the closure.
class Permutation {
public:
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int p) const { return image_[static_cast<std::size_t>(p - 1)]; }
    const std::vector<int>& image() const { return image_; }

    // Cycles ordered by their smallest element; each cycle starts at that element.
    std::vector<std::vector<int>> cycles() const;
    std::size_t cycle_count() const { return cycles().size(); }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

// `b(i,j)` tokens separated by whitespace.
BandWord parse_band_word(std::string_view text, int strands);
std::string to_string(const BandWord& word);

// `s<k>` for sigma_k and `S<k>` for its inverse, whitespace separated.
ArtinWord parse_artin_word(std::string_view text, int strands);
std::string to_string(const ArtinWord& word);

// sigma_{i,j} = (s_i ... s_{j-2}) s_{j-1} (s_i ... s_{j-2})^{-1}
ArtinWord expand_to_artin(const BandWord& word);

// Transposition product, applied left to right.
Permutation underlying_permutation(const BandWord& word);
Permutation underlying_permutation(const ArtinWord& word);

// Moves every letter (i,j) to (i+offset, j+offset) inside B_{new_strands}.
BandWord shift(const BandWord& word, int offset, int new_strands);

}  // namespace sqp
