#include "sqp/invariants.hpp"

#include <numeric>
#include <string>

#include "sqp/errors.hpp"
#include "sqp/surface.hpp"

namespace sqp {

namespace {

struct Cycle {
    int column;
    std::size_t a, b;  // positions of two consecutive crossings in the column
};

}  // namespace

SeifertMatrix seifert_matrix(const ArtinWord& w) {
    const int n = w.strands();
    std::vector<std::vector<std::size_t>> at_column(static_cast<std::size_t>(std::max(n, 1)));
    for (std::size_t pos = 0; pos < w.length(); ++pos) at_column[static_cast<std::size_t>(w[pos].index)].push_back(pos);

    SeifertMatrix result;
    std::vector<Cycle> gens;
    std::vector<std::size_t> first(static_cast<std::size_t>(n + 1), 0);  // first generator of each column
    for (int k = 1; k < n; ++k) {
        const auto& col = at_column[static_cast<std::size_t>(k)];
        if (col.empty()) result.connected = false;
        first[static_cast<std::size_t>(k)] = gens.size();
        for (std::size_t r = 0; r + 1 < col.size(); ++r) gens.push_back({k, col[r], col[r + 1]});
    }
    first[static_cast<std::size_t>(n)] = gens.size();

    auto eps = [&](std::size_t pos) { return static_cast<std::int64_t>(w[pos].sign); };
    const std::size_t size = gens.size();
    result.v = IntMatrix(size, size);
    IntMatrix& v = result.v;
    for (std::size_t g = 0; g < size; ++g) {
        const Cycle& x = gens[g];
        v(g, g) = -(eps(x.a) + eps(x.b)) / 2;
        // The next cycle in the same column shares crossing b.
        if (g + 1 < size && gens[g + 1].column == x.column) {
            if (eps(x.b) > 0) {
                v(g, g + 1) = 1;
            } else {
                v(g + 1, g) = -1;
            }
        }
        // Cycles in the column to the right whose crossings interleave with ours.
        if (x.column + 1 >= n) continue;
        const auto next = static_cast<std::size_t>(x.column + 1);
        for (std::size_t h = first[next]; h < first[next + 1]; ++h) {
            const Cycle& y = gens[h];
            if (x.a < y.a && y.a < x.b && x.b < y.b) v(g, h) = -1;
            if (y.a < x.a && x.a < y.b && y.b < x.b) v(g, h) = 1;
        }
    }
    return result;
}

LaurentPolynomial alexander(const SeifertMatrix& s, Execution mode) {
    if (!s.connected) return {};
    return pencil_determinant(s.v, mode).normalized();
}

int signature(const IntMatrix& symmetric) {
    const std::size_t n = symmetric.rows();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = static_cast<long>(symmetric(r, c));
    std::vector<std::size_t> active(n);
    std::iota(active.begin(), active.end(), 0);
    int sig = 0;
    while (!active.empty()) {
        std::size_t pick = active.size();
        for (std::size_t i = 0; i < active.size() && pick == active.size(); ++i)
            if (a[active[i]][active[i]] != 0) pick = i;
        if (pick == active.size()) {
            // No diagonal pivot: fold a column with a nonzero off-diagonal entry into its row (a congruence).
            std::size_t pi = active.size(), pj = 0;
            for (std::size_t i = 0; i < active.size() && pi == active.size(); ++i)
                for (std::size_t j = 0; j < active.size(); ++j)
                    if (i != j && a[active[i]][active[j]] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == active.size()) break;  // the rest is zero
            const std::size_t i = active[pi], j = active[pj];
            for (std::size_t k : active) a[i][k] += a[j][k];
            for (std::size_t k : active) a[k][i] += a[k][j];
            pick = pi;
        }
        const std::size_t p = active[pick];
        const mpq_class pivot = a[p][p];
        sig += pivot > 0 ? 1 : -1;
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pick));
        for (std::size_t r : active) {
            if (a[r][p] == 0) continue;
            const mpq_class f = a[r][p] / pivot;
            for (std::size_t c : active) a[r][c] -= f * a[p][c];
        }
    }
    return sig;
}

int signature(const SeifertMatrix& s) {
    const IntMatrix& v = s.v;
    IntMatrix sym(v.rows(), v.cols());
    for (std::size_t r = 0; r < v.rows(); ++r)
        for (std::size_t c = 0; c < v.cols(); ++c) sym(r, c) = v(r, c) + v(c, r);
    return signature(sym);
}

IntMatrix linking_matrix(const ArtinWord& w) {
    const auto cycles = underlying_permutation(w).cycles();
    std::vector<std::size_t> component(static_cast<std::size_t>(w.strands()) + 1);
    for (std::size_t c = 0; c < cycles.size(); ++c)
        for (int s : cycles[c]) component[static_cast<std::size_t>(s)] = c;
    IntMatrix twice(cycles.size(), cycles.size());
    std::vector<int> at(static_cast<std::size_t>(w.strands()) + 1);
    std::iota(at.begin(), at.end(), 0);
    for (const Generator& g : w.letters()) {
        const auto k = static_cast<std::size_t>(g.index);
        const std::size_t p = component[static_cast<std::size_t>(at[k])];
        const std::size_t q = component[static_cast<std::size_t>(at[k + 1])];
        if (p != q) {
            twice(p, q) += g.sign;
            twice(q, p) += g.sign;
        }
        std::swap(at[k], at[k + 1]);
    }
    IntMatrix lk(cycles.size(), cycles.size());
    for (std::size_t p = 0; p < cycles.size(); ++p)
        for (std::size_t q = 0; q < cycles.size(); ++q) {
            if (twice(p, q) % 2 != 0) {
                throw OracleViolation("odd crossing count between components " + std::to_string(p) + " and " +
                                      std::to_string(q));
            }
            lk(p, q) = twice(p, q) / 2;
        }
    return lk;
}

ArtinWord extract_component(const ArtinWord& w, std::size_t component) {
    const auto cycles = underlying_permutation(w).cycles();
    if (component >= cycles.size()) {
        throw InputError("component " + std::to_string(component) + " out of range; closure has " +
                         std::to_string(cycles.size()));
    }
    std::vector<bool> keep(static_cast<std::size_t>(w.strands()) + 1, false);
    for (int s : cycles[component]) keep[static_cast<std::size_t>(s)] = true;
    std::vector<int> at(static_cast<std::size_t>(w.strands()) + 1);
    std::iota(at.begin(), at.end(), 0);
    std::vector<Generator> out;
    for (const Generator& g : w.letters()) {
        const auto k = static_cast<std::size_t>(g.index);
        if (keep[static_cast<std::size_t>(at[k])] && keep[static_cast<std::size_t>(at[k + 1])]) {
            int below = 0;
            for (std::size_t p = 1; p < k; ++p) below += keep[static_cast<std::size_t>(at[p])] ? 1 : 0;
            out.push_back({below + 1, g.sign});
        }
        std::swap(at[k], at[k + 1]);
    }
    return ArtinWord(static_cast<int>(cycles[component].size()), std::move(out));
}

LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int writhe) {
    LaurentPolynomial in_a = bracket.shifted(-3 * writhe);
    if (writhe % 2 != 0) in_a = -in_a;
    std::vector<std::pair<int, mpz_class>> terms = in_a.terms();
    LaurentPolynomial out;
    for (const auto& [e, c] : terms) {
        if (e % 2 != 0) throw OracleViolation("bracket has an odd A-exponent after writhe correction");
        out += LaurentPolynomial::monomial(c, -e / 2);
    }
    return out;
}

std::variant<LaurentPolynomial, BudgetExceeded> jones_tl(const ArtinWord& w, int budget, Execution mode) {
    if (w.strands() > budget) return BudgetExceeded{w.strands(), budget};
    return jones_from_bracket(kauffman_bracket(w, mode), w.writhe());
}

SliceFlags slice_necessary(const LaurentPolynomial& delta) {
    SliceFlags flags;
    const mpz_class at_one = delta.evaluate(1);
    flags.unit_at_one = at_one == 1 || at_one == -1;
    const mpz_class det = abs(delta.evaluate(-1));
    flags.square_determinant = mpz_perfect_square_p(det.get_mpz_t()) != 0;
    return flags;
}

InvariantReport full_report(const ArtinWord& w, const ReportOptions& options) {
    InvariantReport r;
    r.strands = w.strands();
    r.linking = linking_matrix(w);
    r.components = r.linking.rows();
    const SeifertMatrix s = seifert_matrix(w);
    r.alexander = alexander(s, options.mode);
    r.signature = signature(s);
    r.determinant = abs(r.alexander.evaluate(-1));
    for (std::size_t c = 0; c < r.components; ++c) {
        LaurentPolynomial delta = alexander(seifert_matrix(extract_component(w, c)), options.mode);
        r.component_slice.push_back(slice_necessary(delta));
        r.component_alexander.push_back(std::move(delta));
    }
    r.jones_budget = options.jones_budget;
    if (options.with_jones) {
        auto j = jones_tl(w, options.jones_budget, options.mode);
        if (auto* poly = std::get_if<LaurentPolynomial>(&j)) {
            r.jones = std::move(*poly);
        } else {
            r.jones_over_budget = true;
        }
    }
    check_consistency(r);
    return r;
}

InvariantReport full_report(const BandWord& w, const ReportOptions& options) {
    InvariantReport r = full_report(expand_to_artin(w), options);
    r.euler = euler_characteristic(w);
    r.first_betti = first_betti(w);
    return r;
}

void check_consistency(const InvariantReport& r) {
    auto fail = [](const std::string& what) { throw OracleViolation("inconsistent report: " + what); };
    if (r.linking.rows() != r.components || r.linking.cols() != r.components) fail("linking matrix size");
    if (r.component_alexander.size() != r.components) fail("per-component polynomial count");
    if (r.determinant != abs(r.alexander.evaluate(-1))) fail("determinant is not |Delta(-1)|");
    for (const auto& delta : r.component_alexander) {
        const mpz_class at_one = delta.evaluate(1);
        if (at_one != 1 && at_one != -1) fail("component polynomial with Delta(1) != +-1");
    }
    if (r.components == 1 && !(r.alexander == r.component_alexander.front())) fail("knot polynomial mismatch");
    if (r.jones) {
        // V(1) = (-2)^(c-1)
        mpz_class expected = 1;
        for (std::size_t c = 1; c < r.components; ++c) expected *= -2;
        if (r.jones->evaluate(1) != expected) fail("Jones value at t = 1");
    }
}

}  // namespace sqp
