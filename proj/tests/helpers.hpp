#pragma once

#include <random>
#include <vector>

#include "sqp/braid.hpp"
#include "sqp/laurent.hpp"

namespace sqp::testing {

inline constexpr const char* alpha_text = "b(1,6) b(3,8) b(2,5) b(1,4) b(3,7) b(2,6) b(5,8) b(4,7)";

inline LaurentPolynomial poly(std::vector<std::pair<int, long>> terms) { return LaurentPolynomial::from_terms(terms); }

inline BandWord random_band_word(std::mt19937_64& rng, int max_strands, int max_letters) {
    const int n = std::uniform_int_distribution<int>(2, max_strands)(rng);
    const int len = std::uniform_int_distribution<int>(1, max_letters)(rng);
    std::vector<Band> letters;
    for (int k = 0; k < len; ++k) {
        int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
        int j = std::uniform_int_distribution<int>(i + 1, n)(rng);
        letters.push_back({i, j});
    }
    return BandWord(n, std::move(letters));
}

inline ArtinWord random_artin_word(std::mt19937_64& rng, int max_strands, int max_letters) {
    const int n = std::uniform_int_distribution<int>(2, max_strands)(rng);
    const int len = std::uniform_int_distribution<int>(1, max_letters)(rng);
    std::vector<Generator> letters;
    for (int k = 0; k < len; ++k) {
        letters.push_back({std::uniform_int_distribution<int>(1, n - 1)(rng),
                           std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1});
    }
    return ArtinWord(n, std::move(letters));
}

}  // namespace sqp::testing
