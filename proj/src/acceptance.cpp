#include "sqp/acceptance.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <random>
#include <sstream>

#include "sqp/errors.hpp"
#include "sqp/report.hpp"
#include "sqp/selection.hpp"
#include "sqp/surface.hpp"

namespace sqp {

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }
};

const LaurentPolynomial& companion_polynomial() {
    static const LaurentPolynomial p = LaurentPolynomial::from_terms({{0, 2}, {1, -5}, {2, 2}});
    return p;
}

BandWord random_sqp(std::mt19937_64& rng, int max_strands, int max_letters) {
    const int n = std::uniform_int_distribution<int>(2, max_strands)(rng);
    const int len = std::uniform_int_distribution<int>(1, max_letters)(rng);
    std::vector<Band> letters;
    for (int k = 0; k < len; ++k) {
        const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
        letters.push_back({i, std::uniform_int_distribution<int>(i + 1, n)(rng)});
    }
    return BandWord(n, std::move(letters));
}

const BandWord hopf(2, {{1, 2}, {1, 2}});
const BandWord trefoil(2, {{1, 2}, {1, 2}, {1, 2}});

Outcome alpha_verification(const AcceptanceOptions& options) {
    Outcome o;
    const BandWord alpha = acceptance_annulus(options).word;
    o.require(surface_graph(alpha).component_count() == 1, "surface is disconnected");
    o.require(euler_characteristic(alpha) == 0, "Euler characteristic " + std::to_string(euler_characteristic(alpha)));
    const std::size_t boundary = trace_boundary(alpha).component_count();
    o.require(boundary == 2, std::to_string(boundary) + " boundary components");
    if (!o.passed) return o;
    const ArtinWord artin = expand_to_artin(alpha);
    const IntMatrix lk = linking_matrix(artin);
    o.require(lk(0, 1) == 1, "linking number " + std::to_string(lk(0, 1)));
    for (std::size_t c = 0; c < 2 && o.passed; ++c) {
        const ArtinWord k = extract_component(artin, c);
        o.require(underlying_permutation(k).cycle_count() == 1, "extracted component is not a knot");
        const LaurentPolynomial delta = alexander(seifert_matrix(k), options.mode);
        o.require(delta == companion_polynomial(), "component " + std::to_string(c + 1) + " has Delta " + delta.to_string());
        o.require(abs(delta.evaluate(-1)) == 9, "determinant " + mpz_class(abs(delta.evaluate(-1))).get_str());
        const SliceFlags f = slice_necessary(delta);
        o.require(f.unit_at_one && f.square_determinant, "slice-necessary flags not both true");
    }
    if (o.passed) o.detail = "connected, chi 0, 2 boundary components, lk +1, both components 2t^2 - 5t + 2, det 9";
    return o;
}

Outcome oracle_equivalence(const AcceptanceOptions& options) {
    Outcome o;
    std::vector<std::pair<std::string, BandWord>> words;
    for (auto& e : load_corpus(options.corpus_dir / "corpus.txt")) words.emplace_back(e.name, e.word);
    const std::size_t corpus_size = words.size();
    std::mt19937_64 rng(options.seed);
    for (int k = 0; k < 20; ++k) words.emplace_back("random " + std::to_string(k + 1), random_sqp(rng, 6, 12));
    int jones_checked = 0, jones_skipped = 0;
    for (std::size_t idx = 0; idx < words.size() && o.passed; ++idx) {
        const auto& [name, w] = words[idx];
        const ArtinWord a = expand_to_artin(w);
        const LaurentPolynomial seifert_route = alexander(seifert_matrix(a), options.mode);
        const LaurentPolynomial burau_route = burau_alexander_oracle(a);
        o.require(associates(seifert_route, burau_route),
                  name + ": Seifert " + seifert_route.to_string() + " vs Burau " + burau_route.to_string());
        if (idx < corpus_size && a.length() <= 8) {
            if (a.strands() > options.jones_budget) {
                ++jones_skipped;
                continue;
            }
            const LaurentPolynomial tl = kauffman_bracket(a, options.mode);
            o.require(tl == kauffman_bracket_state_sum(a), name + ": transfer bracket differs from state sum");
            ++jones_checked;
        }
    }
    if (o.passed) {
        o.detail = std::to_string(words.size()) + " words agree on Delta; " + std::to_string(jones_checked) +
                   " brackets match the state sum";
        if (jones_skipped) o.detail += ", " + std::to_string(jones_skipped) + " skipped over budget";
    }
    return o;
}

Outcome selection_rules(const AcceptanceOptions&) {
    Outcome o;
    const BandSelection h = classify_and_select(hopf);
    o.require(h.kind == SelectionCase::case1 && h.band == 0, "Hopf band not Case 1 at band 1");
    const BandSelection t = classify_and_select(trefoil);
    o.require(t.kind == SelectionCase::case2 && t.band == 0, "trefoil not Case 2 at band 1");
    o.require(surface_graph(trefoil).connected_without(t.band), "trefoil selection is a bridge");
    for (const BandWord& u : {BandWord(1), BandWord(3), BandWord(2, {{1, 2}}), BandWord(3, {{1, 2}, {2, 3}})}) {
        bool rejected = false;
        try {
            classify_and_select(u);
        } catch (const UnlinkInput&) {
            rejected = true;
        }
        o.require(rejected, "unlink surface " + to_string(u) + " accepted");
    }
    if (o.passed) o.detail = "Hopf band Case 1, trefoil Case 2 on a non-bridge band, 4 unlink inputs rejected";
    return o;
}

Outcome trivial_control(const AcceptanceOptions& options) {
    Outcome o;
    ReportOptions ro{true, options.jones_budget, options.mode};
    int jones_compared = 0;
    for (const BandWord& seed : {trefoil, hopf}) {
        const TieResult t = tie(trivial_annulus(), seed, classify_and_select(seed), 1, options.mode);
        const InvariantReport a = full_report(seed, ro);
        const InvariantReport b = full_report(t.word, ro);
        const std::string name = to_string(seed);
        o.require(a.components == b.components, name + ": component count changed");
        o.require(a.linking == b.linking, name + ": linking matrix changed");
        o.require(a.alexander == b.alexander, name + ": Alexander polynomial changed");
        o.require(a.signature == b.signature, name + ": signature changed");
        o.require(a.determinant == b.determinant, name + ": determinant changed");
        o.require(a.component_alexander == b.component_alexander, name + ": component polynomials changed");
        if (a.jones && b.jones) {
            o.require(*a.jones == *b.jones, name + ": Jones polynomial changed");
            ++jones_compared;
        }
    }
    if (o.passed) {
        o.detail = "trefoil and Hopf band unchanged (Delta, signature, det, lk, components, " +
                   std::to_string(jones_compared) + " Jones comparisons)";
    }
    return o;
}

Outcome case1_family(const AcceptanceOptions& options) {
    Outcome o;
    const auto members = family(hopf, 3, acceptance_annulus(options), options.mode);
    std::vector<int> spans;
    for (const FamilyMember& m : members) {
        const ArtinWord a = expand_to_artin(m.word);
        const IntMatrix lk = linking_matrix(a);
        o.require(lk.rows() == 2, "member " + std::to_string(m.iteration) + " has " + std::to_string(lk.rows()) + " components");
        if (!o.passed) break;
        o.require(lk(0, 1) == 1, "member " + std::to_string(m.iteration) + " has lk " + std::to_string(lk(0, 1)));
        const LaurentPolynomial expected = companion_polynomial().pow(static_cast<unsigned>(m.iteration));
        for (std::size_t c = 0; c < 2; ++c) {
            const LaurentPolynomial delta = alexander(seifert_matrix(extract_component(a, c)), options.mode);
            o.require(delta == expected, "member " + std::to_string(m.iteration) + " component " + std::to_string(c + 1) +
                                             " has Delta " + delta.to_string());
            if (c == 0) spans.push_back(delta.span());
        }
    }
    if (o.passed) {
        for (std::size_t i = 0; i < spans.size(); ++i) o.require(spans[i] == static_cast<int>(2 * i), "degree sequence");
        std::ostringstream d;
        d << "components 2, lk +1, component degrees";
        for (int s : spans) d << ' ' << s;
        d << "; pairwise non-isotopic (distinct component polynomials)";
        if (o.passed) o.detail = d.str();
    }
    return o;
}

Outcome case2_family(const AcceptanceOptions& options) {
    Outcome o;
    const auto members = family(trefoil, 2, acceptance_annulus(options), options.mode);
    const LaurentPolynomial expected = LaurentPolynomial::from_terms({{0, 1}, {1, -1}, {2, 1}});
    for (const FamilyMember& m : members) {
        const SeifertMatrix s = seifert_matrix(expand_to_artin(m.word));
        const int sig = signature(s);
        const LaurentPolynomial delta = alexander(s, options.mode);
        o.require(sig == -2, "member " + std::to_string(m.iteration) + " has signature " + std::to_string(sig));
        o.require(delta == expected, "member " + std::to_string(m.iteration) + " has Delta " + delta.to_string());
    }
    if (!o.passed) return o;
    const BandWord& d1 = members[1].word;
    if (d1.strands() > options.jones_budget) {
        o.detail = "signature -2 and Delta t^2 - t + 1 constant for i <= 2; Jones witness skipped (" +
                   std::to_string(d1.strands()) + " strands > budget " + std::to_string(options.jones_budget) +
                   "); non-isotopy for i >= 1 paper-cited";
        return o;
    }
    const auto j0 = std::get<LaurentPolynomial>(jones_tl(expand_to_artin(trefoil), options.jones_budget, options.mode));
    const auto j1 = std::get<LaurentPolynomial>(jones_tl(expand_to_artin(d1), options.jones_budget, options.mode));
    o.require(!(j0 == j1), "Jones polynomial of member 1 equals that of the trefoil");
    if (o.passed) {
        o.detail = "signature -2 and Delta t^2 - t + 1 constant for i <= 2; Jones(member 1) != Jones(trefoil) in B_" +
                   std::to_string(d1.strands()) + "; non-isotopy for i >= 2 paper-cited, not machine-checked";
    }
    return o;
}

Outcome tie_ledger(const AcceptanceOptions& options) {
    Outcome o;
    const AnnulusWord annulus = acceptance_annulus(options);
    std::mt19937_64 rng(options.seed ^ 0x7a11ULL);
    int tied = 0, case1 = 0, attempts = 0;
    while (tied < 50 && o.passed && attempts < 10000) {
        ++attempts;
        const BandWord w = random_sqp(rng, 5, 8);
        if (is_unlink_surface(w)) continue;
        const BandSelection s = classify_and_select(w);
        const TieResult t = tie(annulus, w, s, 1, options.mode);
        o.require(all_hold(t.certificate), "certificate failure on " + to_string(w));
        persistent_selection(s, t.word, t.relocation);
        ++tied;
        case1 += s.kind == SelectionCase::case1 ? 1 : 0;
    }
    o.require(tied == 50, "only " + std::to_string(tied) + " seeds tied");
    if (o.passed) {
        o.detail = "50 random seeds (" + std::to_string(case1) + " Case 1, " + std::to_string(50 - case1) +
                   " Case 2): (a)-(f) pass, selection persists";
    }
    return o;
}

Outcome tb_arithmetic(const AcceptanceOptions&) {
    Outcome o;
    for (int m = 1; m <= 10; ++m) {
        const int tb = tb_connected_sum(std::vector<int>(static_cast<std::size_t>(m), -1));
        o.require(tb == -1, "TB(K_" + std::to_string(m) + ") = " + std::to_string(tb));
    }
    if (o.passed) o.detail = "TB(K_m) = -1 for m = 1..10";
    return o;
}

struct Spec {
    const char* title;
    double limit;
    Outcome (*run)(const AcceptanceOptions&);
};

const Spec specs[criterion_count] = {
    {"alpha verification", 5.0, alpha_verification},
    {"oracle equivalence", 30.0, oracle_equivalence},
    {"band selection", 1.0, selection_rules},
    {"trivial-annulus control", 60.0, trivial_control},
    {"Case 1 family (Hopf band, i <= 3)", 120.0, case1_family},
    {"Case 2 family (trefoil, i <= 2)", 300.0, case2_family},
    {"tie oracle ledger (50 seeds)", 300.0, tie_ledger},
    {"TB arithmetic", 1.0, tb_arithmetic},
};

CriterionResult timed(int id, const char* title, double limit, const std::function<Outcome()>& body) {
    CriterionResult r;
    r.id = id;
    r.title = title;
    r.limit_seconds = limit;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.passed = false;
        o.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = o.passed;
    r.detail = o.detail;
    if (r.passed && limit > 0 && r.seconds > limit) {
        r.passed = false;
        r.detail += "; over the time limit";
    }
    return r;
}

}  // namespace

AnnulusWord acceptance_annulus(const AcceptanceOptions& options) {
    AnnulusWord a = bundled_alpha();
    if (!options.alpha_override.empty()) {
        a.word = parse_band_word(options.alpha_override, 8);
        if (a.word.empty()) throw InputError("alpha override is empty");
        a.designated = std::min(a.designated, a.word.length() - 1);
    }
    return a;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
    if (id < 1 || id > criterion_count) throw InputError("no acceptance criterion " + std::to_string(id));
    const Spec& s = specs[id - 1];
    return timed(id, s.title, s.limit, [&] { return s.run(options); });
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count; ++id) out.push_back(run_criterion(id, options));
    return out;
}

CriterionResult replay_corpus(const AcceptanceOptions& options) {
    return timed(0, "corpus regression", 0.0, [&] {
        Outcome o;
        const ReportOptions ro{true, options.jones_budget, options.mode};
        const auto entries = load_corpus(options.corpus_dir / "corpus.txt");
        for (const auto& e : entries) {
            const auto path = options.corpus_dir / "expected" / (e.name + ".json");
            std::ifstream in(path);
            if (!in) {
                o.require(false, "missing sidecar " + path.string());
                break;
            }
            const nlohmann::json x = nlohmann::json::parse(in);
            const InvariantReport r = full_report(e.word, ro);
            o.require(x.at("components").get<std::size_t>() == r.components, e.name + ": components");
            o.require(x.at("euler").get<int>() == *r.euler, e.name + ": Euler characteristic");
            o.require(x.at("linking").get<IntMatrix>() == r.linking, e.name + ": linking matrix");
            o.require(x.at("alexander").get<LaurentPolynomial>() == r.alexander, e.name + ": Alexander polynomial");
            o.require(x.at("determinant").get<long>() == r.determinant, e.name + ": determinant");
            o.require(x.at("signature").get<int>() == r.signature, e.name + ": signature");
            o.require(x.at("component_alexander").get<std::vector<LaurentPolynomial>>() == r.component_alexander,
                      e.name + ": component polynomials");
            if (!x.at("jones").is_null() && r.jones) {
                o.require(x.at("jones").get<LaurentPolynomial>() == *r.jones, e.name + ": Jones polynomial");
            }
        }
        if (o.passed) o.detail = std::to_string(entries.size()) + " entries match their sidecars";
        return o;
    });
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.passed ? "[PASS] " : "[FAIL] ");
    if (r.id > 0) out << r.id << ". ";
    out << r.title << " (" << std::fixed;
    out.precision(2);
    out << r.seconds << " s";
    if (r.limit_seconds > 0) out << " / limit " << r.limit_seconds << " s";
    out << "): " << r.detail;
    return out.str();
}

}  // namespace sqp
