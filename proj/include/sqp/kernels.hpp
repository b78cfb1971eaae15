#pragma once

#include <cstdint>
#include <vector>

#include "sqp/braid.hpp"
#include "sqp/laurent.hpp"
#include "sqp/matrix.hpp"

namespace sqp {

// Parallel kernels run their outer loop under OpenMP; serial runs the same
// arithmetic on one thread. Results are identical by construction.
enum class Execution { parallel, serial };

// det(V - t V^T) as a polynomial in t, by Chinese remaindering over 62-bit
// primes. Each prime is handled independently.
LaurentPolynomial pencil_determinant(const IntMatrix& v, Execution mode = Execution::parallel);

// Fraction-free Bareiss elimination over Z[t]. Slow; kept as the reference.
LaurentPolynomial pencil_determinant_reference(const IntMatrix& v);

// Kauffman bracket <closure of w> in the variable A, normalised so the
// one-component unknot diagram without crossings is 1. Built by transfer over
// the Temperley-Lieb algebra on the Catalan(n) planar matchings of 2n points.
LaurentPolynomial kauffman_bracket(const ArtinWord& w, Execution mode = Execution::parallel);

// Scatter formulation of the same transfer with no shared tables. Reference only.
LaurentPolynomial kauffman_bracket_reference(const ArtinWord& w);

// Number of planar matchings on 2n points.
std::uint64_t catalan(int n);

}  // namespace sqp
