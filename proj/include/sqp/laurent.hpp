#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace sqp {

// Single-variable Laurent polynomial with big-integer coefficients, stored
// densely from the lowest nonzero exponent. Never stores leading or trailing
// zeros; the zero polynomial has no coefficients.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(long constant);  // NOLINT: implicit by design, integers are polynomials
    LaurentPolynomial(const mpz_class& constant);  // NOLINT

    static LaurentPolynomial monomial(const mpz_class& coefficient, int exponent);
    static LaurentPolynomial from_coefficients(int low_exponent, std::vector<mpz_class> coefficients);
    // Terms may repeat exponents; they are summed.
    static LaurentPolynomial from_terms(const std::vector<std::pair<int, long>>& terms);

    bool is_zero() const { return coef_.empty(); }
    int low_degree() const { return low_; }
    int high_degree() const { return low_ + static_cast<int>(coef_.size()) - 1; }
    // high - low; 0 for monomials and for zero.
    int span() const { return is_zero() ? 0 : high_degree() - low_degree(); }
    mpz_class coefficient(int exponent) const;
    const std::vector<mpz_class>& dense() const { return coef_; }
    std::vector<std::pair<int, mpz_class>> terms() const;

    LaurentPolynomial shifted(int by) const;
    // Multiplied by a unit so the lowest exponent is 0 and the lowest coefficient positive.
    LaurentPolynomial normalized() const;
    // Substitutes t -> 1/t.
    LaurentPolynomial reciprocal() const;
    LaurentPolynomial pow(unsigned exponent) const;

    // Value at x. Negative exponents are only allowed for x = +-1.
    mpz_class evaluate(long x) const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const LaurentPolynomial& other);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
    LaurentPolynomial operator-() const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.low_ == b.low_ && a.coef_ == b.coef_;
    }

    // Exact quotient in Z[t, 1/t]; throws std::domain_error if `divisor` does not divide.
    LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

    // e.g. "2t^2 - 5t + 2", highest exponent first. `half` renders exponent e as e/2.
    std::string to_string(const std::string& variable = "t", bool half = false) const;

private:
    void trim();

    int low_ = 0;
    std::vector<mpz_class> coef_;
};

// Equal up to multiplication by +-t^k.
bool associates(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace sqp
