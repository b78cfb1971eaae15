#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "sqp/kernels.hpp"

namespace sqp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 add_mod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1U) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1U;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // These bases are deterministic for all 64-bit n.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Descending primes below 2^62, generated on demand and cached.
std::vector<u64> primes(std::size_t count) {
    static std::mutex lock;
    static std::vector<u64> cache;
    std::lock_guard<std::mutex> guard(lock);
    u64 candidate = cache.empty() ? (u64{1} << 62) - 1 : cache.back() - 2;
    while (cache.size() < count) {
        if (is_prime(candidate)) cache.push_back(candidate);
        candidate -= 2;
    }
    return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

u64 reduce(std::int64_t x, u64 p) {
    auto r = static_cast<std::int64_t>(static_cast<u64>(x < 0 ? -x : x) % p);
    return x < 0 && r != 0 ? p - static_cast<u64>(r) : static_cast<u64>(r);
}

u64 splitmix(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

using ModMatrix = std::vector<std::vector<u64>>;

// det of a square matrix mod p by elimination (destroys its argument).
u64 det_mod(ModMatrix a, u64 p) {
    const std::size_t n = a.size();
    u64 det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = p - det == p ? 0 : p - det;
        }
        det = mul_mod(det, a[c][c], p);
        const u64 inv = inv_mod(a[c][c], p);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const u64 f = mul_mod(a[r][c], inv, p);
            for (std::size_t k = c; k < n; ++k) a[r][k] = sub_mod(a[r][k], mul_mod(f, a[c][k], p), p);
        }
    }
    return det;
}

// Characteristic polynomial det(xI - M), coefficients low to high, via Hessenberg form.
std::vector<u64> charpoly_mod(ModMatrix h, u64 p) {
    const std::size_t n = h.size();
    for (std::size_t j = 0; j + 2 <= n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && h[piv][j] == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            std::swap(h[piv], h[j + 1]);
            for (auto& row : h) std::swap(row[piv], row[j + 1]);
        }
        const u64 inv = inv_mod(h[j + 1][j], p);
        for (std::size_t i = j + 2; i < n; ++i) {
            const u64 u = mul_mod(h[i][j], inv, p);
            if (u == 0) continue;
            for (std::size_t k = 0; k < n; ++k) h[i][k] = sub_mod(h[i][k], mul_mod(u, h[j + 1][k], p), p);
            for (std::size_t k = 0; k < n; ++k) h[k][j + 1] = add_mod(h[k][j + 1], mul_mod(u, h[k][i], p), p);
        }
    }
    std::vector<std::vector<u64>> poly(n + 1);
    poly[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<u64> next(m + 1, 0);
        const auto& prev = poly[m - 1];
        for (std::size_t k = 0; k < prev.size(); ++k) {
            next[k + 1] = add_mod(next[k + 1], prev[k], p);
            next[k] = sub_mod(next[k], mul_mod(h[m - 1][m - 1], prev[k], p), p);
        }
        u64 t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t = mul_mod(t, h[m - i][m - i - 1], p);
            const u64 f = mul_mod(t, h[m - i - 1][m - 1], p);
            if (f == 0) continue;
            const auto& q = poly[m - i - 1];
            for (std::size_t k = 0; k < q.size(); ++k) next[k] = sub_mod(next[k], mul_mod(f, q[k], p), p);
        }
        poly[m] = std::move(next);
    }
    return poly[n];
}

ModMatrix pencil_at(const IntMatrix& v, u64 x, u64 p) {
    const std::size_t n = v.rows();
    ModMatrix a(n, std::vector<u64>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = sub_mod(reduce(v(r, c), p), mul_mod(x, reduce(v(c, r), p), p), p);
    return a;
}

// Values at 0..n, then Newton interpolation. Used only when the pencil is
// singular at every probe point (typically because it vanishes identically mod p).
std::vector<u64> pencil_by_interpolation(const IntMatrix& v, u64 p) {
    const std::size_t n = v.rows();
    std::vector<u64> y(n + 1);
    for (std::size_t x = 0; x <= n; ++x) y[x] = det_mod(pencil_at(v, x, p), p);
    // Divided differences on nodes 0..n.
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t i = n; i >= level; --i)
            y[i] = mul_mod(sub_mod(y[i], y[i - 1], p), inv_mod(level % p, p), p);
    std::vector<u64> out(n + 1, 0);
    for (std::size_t i = n + 1; i-- > 0;) {
        // out = out * (t - i) + y[i]
        std::vector<u64> next(n + 1, 0);
        for (std::size_t k = 0; k < n; ++k) {
            next[k + 1] = add_mod(next[k + 1], out[k], p);
            next[k] = sub_mod(next[k], mul_mod(i % p, out[k], p), p);
        }
        next[0] = add_mod(next[0], y[i], p);
        out = std::move(next);
    }
    return out;
}

// det(V - tV^T) mod p, coefficients of t^0..t^n.
std::vector<u64> pencil_mod(const IntMatrix& v, u64 p) {
    const std::size_t n = v.rows();
    for (u64 attempt = 0; attempt < 3; ++attempt) {
        const u64 c = splitmix(p ^ (attempt * 0x5851f42d4c957f2dULL)) % p;
        // Gauss-Jordan on [A | V^T] with A = V - cV^T gives det A and M = A^{-1} V^T.
        ModMatrix a = pencil_at(v, c, p);
        ModMatrix m(n, std::vector<u64>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) m[r][k] = reduce(v(k, r), p);
        u64 det_a = 1;
        bool singular = false;
        for (std::size_t col = 0; col < n && !singular; ++col) {
            std::size_t piv = col;
            while (piv < n && a[piv][col] == 0) ++piv;
            if (piv == n) {
                singular = true;
                break;
            }
            if (piv != col) {
                std::swap(a[piv], a[col]);
                std::swap(m[piv], m[col]);
                det_a = det_a == 0 ? 0 : p - det_a;
            }
            det_a = mul_mod(det_a, a[col][col], p);
            const u64 inv = inv_mod(a[col][col], p);
            for (std::size_t k = 0; k < n; ++k) {
                a[col][k] = mul_mod(a[col][k], inv, p);
                m[col][k] = mul_mod(m[col][k], inv, p);
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || a[r][col] == 0) continue;
                const u64 f = a[r][col];
                for (std::size_t k = 0; k < n; ++k) {
                    a[r][k] = sub_mod(a[r][k], mul_mod(f, a[col][k], p), p);
                    m[r][k] = sub_mod(m[r][k], mul_mod(f, m[col][k], p), p);
                }
            }
        }
        if (singular) continue;
        // V - tV^T = A (I - sM) with s = t - c, and det(I - sM) = sum_k chi_k s^{n-k}.
        const std::vector<u64> chi = charpoly_mod(std::move(m), p);
        std::vector<u64> out(n + 1, 0);
        // Horner in (t - c) over the coefficients of s, highest power first.
        for (std::size_t j = n + 1; j-- > 0;) {
            std::vector<u64> next(n + 1, 0);
            for (std::size_t k = 0; k < n; ++k) {
                next[k + 1] = add_mod(next[k + 1], out[k], p);
                next[k] = sub_mod(next[k], mul_mod(c, out[k], p), p);
            }
            next[0] = add_mod(next[0], chi[n - j], p);
            out = std::move(next);
        }
        for (auto& x : out) x = mul_mod(x, det_a, p);
        return out;
    }
    return pencil_by_interpolation(v, p);
}

// Every coefficient is bounded by the permanent of |V| + |V^T|, hence by the product of its row sums.
mpz_class coefficient_bound(const IntMatrix& v) {
    mpz_class bound = 1;
    for (std::size_t r = 0; r < v.rows(); ++r) {
        mpz_class row = 0;
        for (std::size_t c = 0; c < v.cols(); ++c) {
            row += static_cast<unsigned long>(std::abs(v(r, c)));
            row += static_cast<unsigned long>(std::abs(v(c, r)));
        }
        bound *= row;
    }
    return bound;
}

mpz_class to_mpz(u64 x) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
    return z;
}

}  // namespace

LaurentPolynomial pencil_determinant(const IntMatrix& v, Execution mode) {
    if (v.rows() != v.cols()) throw std::invalid_argument("pencil_determinant needs a square matrix");
    const std::size_t n = v.rows();
    if (n == 0) return LaurentPolynomial(1L);

    const mpz_class limit = 2 * coefficient_bound(v) + 1;
    std::size_t count = 1;
    for (mpz_class product = to_mpz(primes(1)[0]); product < limit; ++count) {
        product *= to_mpz(primes(count + 1)[count]);
    }
    const std::vector<u64> ps = primes(count);

    std::vector<std::vector<u64>> residues(count);
    const bool parallel = mode == Execution::parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::size_t i = 0; i < count; ++i) residues[i] = pencil_mod(v, ps[i]);

    // Incremental CRT, then the symmetric residue.
    std::vector<mpz_class> coef(n + 1, 0);
    mpz_class modulus = 1;
    for (std::size_t i = 0; i < count; ++i) {
        const mpz_class p = to_mpz(ps[i]);
        mpz_class inv;
        mpz_class m_mod_p = modulus % p;
        mpz_invert(inv.get_mpz_t(), m_mod_p.get_mpz_t(), p.get_mpz_t());
        for (std::size_t k = 0; k <= n; ++k) {
            mpz_class diff = to_mpz(residues[i][k]) - coef[k] % p;
            diff = (diff * inv) % p;
            if (diff < 0) diff += p;
            coef[k] += modulus * diff;
        }
        modulus *= p;
    }
    const mpz_class half = modulus / 2;
    for (auto& c : coef)
        if (c > half) c -= modulus;
    return LaurentPolynomial::from_coefficients(0, std::move(coef));
}

LaurentPolynomial pencil_determinant_reference(const IntMatrix& v) {
    if (v.rows() != v.cols()) throw std::invalid_argument("pencil_determinant needs a square matrix");
    const std::size_t n = v.rows();
    std::vector<std::vector<LaurentPolynomial>> a(n, std::vector<LaurentPolynomial>(n));
    const LaurentPolynomial t = LaurentPolynomial::monomial(1, 1);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = LaurentPolynomial(static_cast<long>(v(r, c))) - t * static_cast<long>(v(c, r));
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
            for (std::size_t c = k + 1; c < n; ++c) {
                a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]).divide_exact(previous);
            }
            a[r][k] = LaurentPolynomial();
        }
        previous = a[k][k];
    }
    return sign > 0 ? previous : -previous;
}

}  // namespace sqp
