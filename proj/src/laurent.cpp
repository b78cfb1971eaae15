#include "sqp/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sqp {

LaurentPolynomial::LaurentPolynomial(long constant) : LaurentPolynomial(mpz_class(constant)) {}

LaurentPolynomial::LaurentPolynomial(const mpz_class& constant) {
    if (constant != 0) coef_.push_back(constant);
}

LaurentPolynomial LaurentPolynomial::monomial(const mpz_class& coefficient, int exponent) {
    LaurentPolynomial p(coefficient);
    if (!p.is_zero()) p.low_ = exponent;
    return p;
}

LaurentPolynomial LaurentPolynomial::from_coefficients(int low_exponent, std::vector<mpz_class> coefficients) {
    LaurentPolynomial p;
    p.low_ = low_exponent;
    p.coef_ = std::move(coefficients);
    p.trim();
    return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(const std::vector<std::pair<int, long>>& terms) {
    LaurentPolynomial p;
    for (const auto& [e, c] : terms) p += monomial(mpz_class(c), e);
    return p;
}

void LaurentPolynomial::trim() {
    auto first = std::find_if(coef_.begin(), coef_.end(), [](const mpz_class& c) { return c != 0; });
    if (first == coef_.end()) {
        coef_.clear();
        low_ = 0;
        return;
    }
    low_ += static_cast<int>(first - coef_.begin());
    coef_.erase(coef_.begin(), first);
    while (coef_.back() == 0) coef_.pop_back();
}

mpz_class LaurentPolynomial::coefficient(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > high_degree()) return 0;
    return coef_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, mpz_class>> LaurentPolynomial::terms() const {
    std::vector<std::pair<int, mpz_class>> out;
    for (std::size_t k = 0; k < coef_.size(); ++k) {
        if (coef_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coef_[k]);
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int by) const {
    LaurentPolynomial p = *this;
    if (!p.is_zero()) p.low_ += by;
    return p;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
    LaurentPolynomial p = shifted(-low_);
    if (!p.is_zero() && p.coef_.front() < 0) p = -p;
    return p;
}

LaurentPolynomial LaurentPolynomial::reciprocal() const {
    if (is_zero()) return {};
    std::vector<mpz_class> c(coef_.rbegin(), coef_.rend());
    return from_coefficients(-high_degree(), std::move(c));
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
    LaurentPolynomial result(1L), base = *this;
    while (exponent) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent) base *= base;
    }
    return result;
}

mpz_class LaurentPolynomial::evaluate(long x) const {
    if (low_ < 0 && x != 1 && x != -1) {
        throw std::domain_error("negative exponents can only be evaluated at +-1");
    }
    // Horner from the top, then apply x^low.
    mpz_class acc = 0;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
    if (low_ > 0) {
        mpz_class xp;
        mpz_pow_ui(xp.get_mpz_t(), mpz_class(x).get_mpz_t(), static_cast<unsigned long>(low_));
        acc *= xp;
    } else if (low_ < 0 && x == -1 && (-low_) % 2 == 1) {
        acc = -acc;
    }
    return acc;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) return *this = other;
    const int lo = std::min(low_, other.low_);
    const int hi = std::max(high_degree(), other.high_degree());
    std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < coef_.size(); ++k) c[static_cast<std::size_t>(low_ - lo) + k] = coef_[k];
    for (std::size_t k = 0; k < other.coef_.size(); ++k) c[static_cast<std::size_t>(other.low_ - lo) + k] += other.coef_[k];
    low_ = lo;
    coef_ = std::move(c);
    trim();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) { return *this += -other; }

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
    if (is_zero() || other.is_zero()) return *this = LaurentPolynomial();
    std::vector<mpz_class> c(coef_.size() + other.coef_.size() - 1);
    for (std::size_t a = 0; a < coef_.size(); ++a) {
        if (coef_[a] == 0) continue;
        for (std::size_t b = 0; b < other.coef_.size(); ++b) c[a + b] += coef_[a] * other.coef_[b];
    }
    low_ += other.low_;
    coef_ = std::move(c);
    trim();
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial p = *this;
    for (auto& c : p.coef_) c = -c;
    return p;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (is_zero()) return {};
    // Long division from the top on the dense parts; the exponent offsets separate out.
    std::vector<mpz_class> rem = coef_;
    const auto& d = divisor.coef_;
    if (rem.size() < d.size()) throw std::domain_error("polynomial division is not exact");
    std::vector<mpz_class> q(rem.size() - d.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        const mpz_class& top = rem[k + d.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) {
            throw std::domain_error("polynomial division is not exact");
        }
        q[k] = top / d.back();
        for (std::size_t m = 0; m < d.size(); ++m) rem[k + m] -= q[k] * d[m];
    }
    if (std::any_of(rem.begin(), rem.end(), [](const mpz_class& c) { return c != 0; })) {
        throw std::domain_error("polynomial division is not exact");
    }
    return from_coefficients(low_ - divisor.low_, std::move(q));
}

std::string LaurentPolynomial::to_string(const std::string& variable, bool half) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = high_degree(); e >= low_; --e) {
        mpz_class c = coefficient(e);
        if (c == 0) continue;
        const bool negative = c < 0;
        mpz_class mag = abs(c);
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str();
        out << variable;
        if (half) {
            if (e % 2 == 0) {
                if (e != 2) out << '^' << e / 2;
            } else {
                out << "^(" << e << "/2)";
            }
        } else if (e != 1) {
            out << '^' << e;
        }
    }
    return out.str();
}

bool associates(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.normalized() == b.normalized(); }

}  // namespace sqp
