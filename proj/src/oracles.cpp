#include <algorithm>
#include <numeric>
#include <vector>

#include "sqp/errors.hpp"
#include "sqp/invariants.hpp"

namespace sqp {

namespace {

using LaurentMatrix = std::vector<std::vector<LaurentPolynomial>>;

LaurentPolynomial bareiss_det(LaurentMatrix a) {
    const std::size_t n = a.size();
    LaurentPolynomial previous(1L);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k].is_zero()) ++piv;
        if (piv == n) return {};
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c) a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]).divide_exact(previous);
        }
        previous = a[k][k];
    }
    return n == 0 ? LaurentPolynomial(1L) : (sign > 0 ? previous : -previous);
}

}  // namespace

LaurentPolynomial burau_alexander_oracle(const ArtinWord& w) {
    const int n = w.strands();
    if (n == 1) return LaurentPolynomial(1L);
    const auto m = static_cast<std::size_t>(n - 1);
    const LaurentPolynomial t = LaurentPolynomial::monomial(1, 1);
    const LaurentPolynomial t_inv = LaurentPolynomial::monomial(1, -1);
    const LaurentPolynomial one(1L);

    LaurentMatrix b(m, std::vector<LaurentPolynomial>(m));
    for (std::size_t i = 0; i < m; ++i) b[i][i] = one;
    // Right-multiply by each generator's reduced Burau matrix, which differs
    // from the identity only in row k.
    for (const Generator& g : w.letters()) {
        const auto k = static_cast<std::size_t>(g.index - 1);
        std::vector<std::pair<std::size_t, LaurentPolynomial>> row;
        if (g.sign > 0) {
            row.emplace_back(k, -t);
            if (k > 0) row.emplace_back(k - 1, t);
            if (k + 1 < m) row.emplace_back(k + 1, one);
        } else {
            row.emplace_back(k, -t_inv);
            if (k > 0) row.emplace_back(k - 1, one);
            if (k + 1 < m) row.emplace_back(k + 1, t_inv);
        }
        for (std::size_t r = 0; r < m; ++r) {
            const LaurentPolynomial x = b[r][k];
            if (x.is_zero()) continue;
            for (const auto& [c, value] : row) b[r][c] += x * (c == k ? value - one : value);
        }
    }
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) b[r][c] = (r == c ? one : LaurentPolynomial()) - b[r][c];
    const LaurentPolynomial det = bareiss_det(std::move(b));
    std::vector<mpz_class> ones(static_cast<std::size_t>(n), 1);
    const LaurentPolynomial cyclotomic = LaurentPolynomial::from_coefficients(0, std::move(ones));
    try {
        return det.divide_exact(cyclotomic).normalized();
    } catch (const std::domain_error&) {
        throw OracleViolation("Burau determinant not divisible by 1 + t + ... + t^(n-1)");
    }
}

LaurentPolynomial kauffman_bracket_state_sum(const ArtinWord& w) {
    const int n = w.strands();
    const auto c = static_cast<int>(w.length());
    if (c > 24) throw InputError("state sum refused: " + std::to_string(c) + " crossings");
    // Points are (position, level); crossing r joins levels r and r+1, and level c is level 0.
    const int levels = std::max(c, 1);
    auto node = [&](int pos, int level) { return static_cast<std::size_t>((level % levels) * n + (pos - 1)); };
    const LaurentPolynomial d = LaurentPolynomial::from_terms({{2, -1}, {-2, -1}});
    std::vector<LaurentPolynomial> loop_power;
    std::vector<std::vector<long>> count_by_loops;  // [loops][exponent + c]
    for (unsigned long mask = 0; mask < (1UL << c); ++mask) {
        std::vector<std::size_t> parent(static_cast<std::size_t>(levels * n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
        int exponent = 0;
        for (int r = 0; r < c; ++r) {
            const int k = w[static_cast<std::size_t>(r)].index;
            const int s = w[static_cast<std::size_t>(r)].sign;
            for (int p = 1; p <= n; ++p)
                if (p != k && p != k + 1) unite(node(p, r), node(p, r + 1));
            if ((mask >> static_cast<unsigned>(r)) & 1UL) {
                unite(node(k, r), node(k + 1, r));
                unite(node(k, r + 1), node(k + 1, r + 1));
                exponent -= s;
            } else {
                unite(node(k, r), node(k, r + 1));
                unite(node(k + 1, r), node(k + 1, r + 1));
                exponent += s;
            }
        }
        std::size_t loops = 0;
        for (std::size_t x = 0; x < parent.size(); ++x)
            if (find(x) == x) ++loops;
        if (count_by_loops.size() <= loops) count_by_loops.resize(loops + 1, std::vector<long>(static_cast<std::size_t>(2 * c + 1), 0));
        ++count_by_loops[loops][static_cast<std::size_t>(exponent + c)];
    }
    LaurentPolynomial total;
    for (std::size_t loops = 1; loops < count_by_loops.size(); ++loops) {
        LaurentPolynomial states;
        for (std::size_t e = 0; e < count_by_loops[loops].size(); ++e)
            states += LaurentPolynomial::monomial(count_by_loops[loops][e], static_cast<int>(e) - c);
        total += states * d.pow(static_cast<unsigned>(loops - 1));
    }
    return total;
}

}  // namespace sqp
