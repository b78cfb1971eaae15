#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "sqp/braid.hpp"
#include "sqp/kernels.hpp"
#include "sqp/laurent.hpp"
#include "sqp/matrix.hpp"

namespace sqp {

inline constexpr int default_jones_budget = 12;

// Seifert matrix of the surface Seifert's algorithm gives on the closed braid
// diagram: one disk per strand, one twisted band per crossing. Rows are the
// cycles formed by consecutive crossings in the same column, ordered by column
// and then by position.
struct SeifertMatrix {
    IntMatrix v;
    // False when some column carries no crossing. The surface is then
    // disconnected, the closure is split and its Alexander polynomial is 0.
    bool connected = true;
};

SeifertMatrix seifert_matrix(const ArtinWord& w);

// det(V - tV^T), normalised: lowest exponent 0, lowest coefficient positive.
LaurentPolynomial alexander(const SeifertMatrix& s, Execution mode = Execution::parallel);
// Signature of V + V^T by exact rational elimination.
int signature(const SeifertMatrix& s);
int signature(const IntMatrix& symmetric);

// Components are the cycles of the underlying permutation, in the order of
// Permutation::cycles(). Entry (p, q) is the linking number; the diagonal is 0.
IntMatrix linking_matrix(const ArtinWord& w);

// The sub-braid on the strands of one component. Its closure is that component.
ArtinWord extract_component(const ArtinWord& w, std::size_t component);

struct BudgetExceeded {
    int strands = 0;
    int budget = 0;
};

// Jones polynomial of the closure, unknot = 1. Exponents count powers of t^(1/2).
std::variant<LaurentPolynomial, BudgetExceeded> jones_tl(const ArtinWord& w, int budget = default_jones_budget,
                                                         Execution mode = Execution::parallel);
// Jones from a bracket and writhe: (-A^3)^(-writhe) <L>, then A = t^(-1/4).
LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int writhe);

// Alexander polynomial from the reduced Burau matrix, normalised like alexander().
// Independent of the Seifert route; used as a cross-check.
LaurentPolynomial burau_alexander_oracle(const ArtinWord& w);

// Kauffman bracket by summing all 2^c smoothings. Exponential; a cross-check
// for kauffman_bracket() on small diagrams. Throws InputError above 24 crossings.
LaurentPolynomial kauffman_bracket_state_sum(const ArtinWord& w);

struct SliceFlags {
    bool unit_at_one = false;        // Delta(1) = +-1
    bool square_determinant = false; // |Delta(-1)| is a perfect square

    friend bool operator==(const SliceFlags&, const SliceFlags&) = default;
};

SliceFlags slice_necessary(const LaurentPolynomial& delta);

struct ReportOptions {
    bool with_jones = true;
    int jones_budget = default_jones_budget;
    Execution mode = Execution::parallel;
};

struct InvariantReport {
    int strands = 0;
    std::size_t components = 0;
    // Only for band words, where F(w) is the canonical surface.
    std::optional<int> euler;
    std::optional<int> first_betti;
    IntMatrix linking;
    LaurentPolynomial alexander;
    int signature = 0;
    mpz_class determinant;
    // Absent when not requested or over budget; jones_over_budget tells which.
    std::optional<LaurentPolynomial> jones;
    bool jones_over_budget = false;
    int jones_budget = default_jones_budget;
    std::vector<LaurentPolynomial> component_alexander;
    std::vector<SliceFlags> component_slice;
};

InvariantReport full_report(const ArtinWord& w, const ReportOptions& options = {});
InvariantReport full_report(const BandWord& w, const ReportOptions& options = {});

// Throws OracleViolation if the report contradicts itself.
void check_consistency(const InvariantReport& report);

}  // namespace sqp
