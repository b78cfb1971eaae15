#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sqp/kernels.hpp"

namespace sqp {

namespace {

// A planar matching of the 2n boundary points of an n-strand TL diagram.
// Labels: top 0..n-1, bottom n..2n-1. partner[x] is the point joined to x.
using Matching = std::string;

int partner(const Matching& m, int x) { return static_cast<unsigned char>(m[static_cast<std::size_t>(x)]); }
void join(Matching& m, int x, int y) {
    m[static_cast<std::size_t>(x)] = static_cast<char>(y);
    m[static_cast<std::size_t>(y)] = static_cast<char>(x);
}

// Around the boundary circle the order is top left to right, then bottom right to left.
void enumerate(int lo, int hi, const std::vector<int>& label, Matching& m,
               std::vector<Matching>& out, std::vector<std::pair<int, int>>& pending) {
    if (lo > hi) {
        if (pending.empty()) {
            out.push_back(m);
            return;
        }
        auto [a, b] = pending.back();
        pending.pop_back();
        enumerate(a, b, label, m, out, pending);
        pending.emplace_back(a, b);
        return;
    }
    for (int q = lo + 1; q <= hi; q += 2) {
        join(m, label[static_cast<std::size_t>(lo)], label[static_cast<std::size_t>(q)]);
        pending.emplace_back(q + 1, hi);
        enumerate(lo + 1, q - 1, label, m, out, pending);
        pending.pop_back();
    }
}

std::vector<Matching> all_matchings(int n) {
    std::vector<int> label(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        label[static_cast<std::size_t>(i)] = i;
        label[static_cast<std::size_t>(2 * n - 1 - i)] = n + i;
    }
    std::vector<Matching> out;
    Matching m(static_cast<std::size_t>(2 * n), '\0');
    std::vector<std::pair<int, int>> pending;
    enumerate(0, 2 * n - 1, label, m, out, pending);
    return out;
}

Matching identity_matching(int n) {
    Matching m(static_cast<std::size_t>(2 * n), '\0');
    for (int i = 0; i < n; ++i) join(m, i, n + i);
    return m;
}

// Stacks e_k under m. Returns true when the cap closes a loop (m unchanged).
bool apply_e(Matching& m, int n, int k) {
    const int a = n + k, b = n + k + 1;
    if (partner(m, a) == b) return true;
    const int x = partner(m, a), y = partner(m, b);
    join(m, x, y);
    join(m, a, b);
    return false;
}

// Loops formed when top i is joined to bottom i for every i.
int closure_loops(const Matching& m, int n) {
    std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
    int loops = 0;
    for (int start = 0; start < 2 * n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++loops;
        int x = start;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            const int y = partner(m, x);
            seen[static_cast<std::size_t>(y)] = true;
            x = y < n ? y + n : y - n;
        }
    }
    return loops;
}

struct Overflow {};

template <typename Coef>
Coef checked_add(Coef a, Coef b) {
    Coef r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}

// Coefficients of A^e for e = low, low+2, ... All states share the exponent parity.
template <typename Coef>
struct Poly {
    int low = 0;
    std::vector<Coef> c;

    bool empty() const { return c.empty(); }
    int high() const { return low + 2 * (static_cast<int>(c.size()) - 1); }
};

template <typename Coef>
void accumulate(Poly<Coef>& into, const Poly<Coef>& p, int shift) {
    if (p.empty()) return;
    const int lo = p.low + shift;
    if (into.empty()) {
        into.low = lo;
        into.c = p.c;
        return;
    }
    const int new_low = std::min(into.low, lo);
    const int new_high = std::max(into.high(), p.high() + shift);
    if (new_low != into.low || new_high != into.high()) {
        std::vector<Coef> grown(static_cast<std::size_t>((new_high - new_low) / 2 + 1), 0);
        std::copy(into.c.begin(), into.c.end(), grown.begin() + (into.low - new_low) / 2);
        into.c = std::move(grown);
        into.low = new_low;
    }
    const auto offset = static_cast<std::size_t>((lo - into.low) / 2);
    for (std::size_t k = 0; k < p.c.size(); ++k) into.c[offset + k] = checked_add(into.c[offset + k], p.c[k]);
}

// p * (-A^2 - A^-2), shifted by `shift`.
template <typename Coef>
void accumulate_loop(Poly<Coef>& into, const Poly<Coef>& p, int shift) {
    if (p.empty()) return;
    Poly<Coef> neg{p.low, p.c};
    for (auto& x : neg.c) {
        if (x == std::numeric_limits<Coef>::min()) throw Overflow{};
        x = -x;
    }
    accumulate(into, neg, shift + 2);
    accumulate(into, neg, shift - 2);
}

mpz_class to_mpz(__int128 x) {
    const bool negative = x < 0;
    unsigned __int128 u = negative ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    const auto lo = static_cast<std::uint64_t>(u);
    const auto hi = static_cast<std::uint64_t>(u >> 64U);
    mpz_class z, h;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(lo), 0, 0, &lo);
    mpz_import(h.get_mpz_t(), 1, 1, sizeof(hi), 0, 0, &hi);
    z += h << 64;
    return negative ? mpz_class(-z) : z;
}

template <typename Coef>
LaurentPolynomial to_laurent(const Poly<Coef>& p) {
    std::vector<mpz_class> dense(p.c.size() * 2 - 1);
    for (std::size_t k = 0; k < p.c.size(); ++k) dense[2 * k] = to_mpz(static_cast<__int128>(p.c[k]));
    return LaurentPolynomial::from_coefficients(p.low, std::move(dense));
}

LaurentPolynomial loop_value() { return LaurentPolynomial::from_terms({{2, -1}, {-2, -1}}); }

template <typename Coef>
LaurentPolynomial close_up(const std::vector<Matching>& states, const std::vector<Poly<Coef>>& value, int n) {
    std::map<int, LaurentPolynomial> by_loops;
    for (std::size_t s = 0; s < states.size(); ++s) {
        if (value[s].empty()) continue;
        by_loops[closure_loops(states[s], n)] += to_laurent(value[s]);
    }
    LaurentPolynomial total;
    for (const auto& [loops, sum] : by_loops) total += sum * loop_value().pow(static_cast<unsigned>(loops - 1));
    return total;
}

struct Tables {
    int n = 0;
    std::vector<Matching> states;
    std::size_t identity = 0;
    // Per generator k: loop flag of each state, and sources of each target in CSR form.
    std::vector<std::vector<char>> loop;
    std::vector<std::vector<std::size_t>> offsets;
    std::vector<std::vector<std::size_t>> sources;
};

Tables build_tables(int n, bool parallel) {
    Tables t;
    t.n = n;
    t.states = all_matchings(n);
    std::unordered_map<Matching, std::size_t> index;
    index.reserve(t.states.size());
    for (std::size_t s = 0; s < t.states.size(); ++s) index.emplace(t.states[s], s);
    t.identity = index.at(identity_matching(n));
    const std::size_t count = t.states.size();
    const auto gens = static_cast<std::size_t>(std::max(n - 1, 0));
    t.loop.assign(gens, std::vector<char>(count, 0));
    t.offsets.assign(gens, {});
    t.sources.assign(gens, {});
#pragma omp parallel for schedule(static) if (parallel)
    for (std::size_t k = 0; k < gens; ++k) {
        std::vector<std::size_t> target(count);
        for (std::size_t s = 0; s < count; ++s) {
            Matching m = t.states[s];
            t.loop[k][s] = apply_e(m, n, static_cast<int>(k)) ? 1 : 0;
            target[s] = index.at(m);
        }
        std::vector<std::size_t>& off = t.offsets[k];
        off.assign(count + 1, 0);
        for (std::size_t s = 0; s < count; ++s)
            if (!t.loop[k][s]) ++off[target[s] + 1];
        for (std::size_t s = 0; s < count; ++s) off[s + 1] += off[s];
        std::vector<std::size_t> fill(off.begin(), off.end() - 1);
        t.sources[k].assign(off.back(), 0);
        for (std::size_t s = 0; s < count; ++s)
            if (!t.loop[k][s]) t.sources[k][fill[target[s]]++] = s;
    }
    return t;
}

template <typename Coef>
LaurentPolynomial bracket_gather(const ArtinWord& w, const Tables& t, bool parallel) {
    const std::size_t count = t.states.size();
    std::vector<Poly<Coef>> cur(count), next(count);
    cur[t.identity] = {0, {1}};
    for (const Generator& g : w.letters()) {
        const auto k = static_cast<std::size_t>(g.index - 1);
        const int s = g.sign;
        const auto& loop = t.loop[k];
        const auto& off = t.offsets[k];
        const auto& src = t.sources[k];
        bool overflow = false;
        // sigma^s = A^s 1 + A^-s e_k; a closed loop contributes -A^2 - A^-2.
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
        for (std::size_t m = 0; m < count; ++m) {
            Poly<Coef> acc;
            try {
                accumulate(acc, cur[m], s);
                if (loop[m]) accumulate_loop(acc, cur[m], -s);
                for (std::size_t r = off[m]; r < off[m + 1]; ++r) accumulate(acc, cur[src[r]], -s);
            } catch (const Overflow&) {
#pragma omp atomic write
                overflow = true;
            }
            next[m] = std::move(acc);
        }
        if (overflow) throw Overflow{};
        std::swap(cur, next);
    }
    return close_up(t.states, cur, t.n);
}

}  // namespace

std::uint64_t catalan(int n) {
    std::uint64_t c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (static_cast<std::uint64_t>(k) + 2);
    return c;
}

LaurentPolynomial kauffman_bracket(const ArtinWord& w, Execution mode) {
    const bool parallel = mode == Execution::parallel;
    const Tables tables = build_tables(w.strands(), parallel);
    try {
        return bracket_gather<std::int64_t>(w, tables, parallel);
    } catch (const Overflow&) {
    }
    try {
        return bracket_gather<__int128>(w, tables, parallel);
    } catch (const Overflow&) {
        throw std::overflow_error("Kauffman bracket coefficients exceed 127 bits");
    }
}

LaurentPolynomial kauffman_bracket_reference(const ArtinWord& w) {
    const int n = w.strands();
    std::map<Matching, LaurentPolynomial> state{{identity_matching(n), LaurentPolynomial(1L)}};
    const LaurentPolynomial d = loop_value();
    for (const Generator& g : w.letters()) {
        const LaurentPolynomial keep = LaurentPolynomial::monomial(1, g.sign);
        const LaurentPolynomial smooth = LaurentPolynomial::monomial(1, -g.sign);
        std::map<Matching, LaurentPolynomial> next;
        for (const auto& [m, value] : state) {
            next[m] += value * keep;
            Matching e = m;
            if (apply_e(e, n, g.index - 1)) {
                next[e] += value * smooth * d;
            } else {
                next[e] += value * smooth;
            }
        }
        state.clear();
        for (auto& [m, value] : next)
            if (!value.is_zero()) state.emplace(m, std::move(value));
    }
    LaurentPolynomial total;
    for (const auto& [m, value] : state) total += value * d.pow(static_cast<unsigned>(closure_loops(m, n) - 1));
    return total;
}

}  // namespace sqp
