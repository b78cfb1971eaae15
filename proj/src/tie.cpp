#include "sqp/tie.hpp"

#include <string>

#include "sqp/errors.hpp"
#include "sqp/invariants.hpp"
#include "sqp/surface.hpp"

namespace sqp {

const char* to_string(Assertion::Status status) {
    switch (status) {
        case Assertion::Status::pass: return "pass";
        case Assertion::Status::fail: return "fail";
        case Assertion::Status::paper_cited: return "paper-cited";
    }
    return "fail";
}

AnnulusWord bundled_alpha() {
    AnnulusWord a;
    a.name = "alpha";
    a.word = parse_band_word("b(1,6) b(3,8) b(2,5) b(1,4) b(3,7) b(2,6) b(5,8) b(4,7)", 8);
    a.designated = 7;
    a.companion = "m(9_46)";
    a.companion_alexander = LaurentPolynomial::from_terms({{0, 2}, {1, -5}, {2, 2}});
    a.linking = 1;
    return a;
}

AnnulusWord trivial_annulus() {
    AnnulusWord a;
    a.name = "trivial";
    a.word = BandWord(2, {{1, 2}, {1, 2}});
    a.designated = 0;
    a.companion = "unknot";
    a.companion_alexander = LaurentPolynomial(1L);
    a.linking = 1;
    return a;
}

void validate_annulus(const AnnulusWord& a) {
    auto fail = [&](const std::string& why) { throw InputError("annulus '" + a.name + "': " + why); };
    if (a.designated >= a.word.length()) fail("designated band out of range");
    if (euler_characteristic(a.word) != 0) fail("Euler characteristic is not 0");
    if (surface_graph(a.word).component_count() != 1) fail("surface is disconnected");
    const ArtinWord artin = expand_to_artin(a.word);
    const IntMatrix lk = linking_matrix(artin);
    if (lk.rows() != 2) fail("boundary does not have two components");
    if (lk(0, 1) != a.linking) {
        fail("boundary linking number is " + std::to_string(lk(0, 1)) + ", expected " + std::to_string(a.linking));
    }
    for (std::size_t c = 0; c < 2; ++c) {
        const LaurentPolynomial delta = alexander(seifert_matrix(extract_component(artin, c)));
        if (!associates(delta, a.companion_alexander)) {
            fail("boundary component " + std::to_string(c + 1) + " has Alexander polynomial " + delta.to_string() +
                 ", expected " + a.companion_alexander.to_string());
        }
    }
}

TieWord tie_word(const AnnulusWord& annulus, const BandWord& target, std::size_t band) {
    if (band >= target.length()) throw SelectionInvalid("band " + std::to_string(band + 1) + " is not in the word");
    const int m = annulus.word.strands();
    const int strands = target.strands() + m;
    const auto& a = annulus.word.letters();
    const Band pq = a[annulus.designated];
    const Band ij{target[band].i + m, target[band].j + m};

    std::vector<Band> out;
    TieWord result{BandWord(strands), BandRelocation(target.length()), 0};
    for (std::size_t r = 0; r < band; ++r) {
        result.relocation[r] = out.size();
        out.push_back({target[r].i + m, target[r].j + m});
    }
    for (std::size_t r = annulus.designated + 1; r < a.size(); ++r) out.push_back(a[r]);
    for (std::size_t r = 0; r < annulus.designated; ++r) out.push_back(a[r]);
    out.push_back({pq.j, ij.j});
    result.marked = out.size();
    result.relocation[band] = out.size();
    out.push_back({pq.i, ij.i});
    for (std::size_t r = band + 1; r < target.length(); ++r) {
        result.relocation[r] = out.size();
        out.push_back({target[r].i + m, target[r].j + m});
    }
    result.word = BandWord(strands, std::move(out));
    return result;
}

namespace {

struct Snapshot {
    int euler = 0;
    int surface_components = 0;
    std::vector<std::vector<int>> cycles;
    std::vector<int> component_of_strand;
    IntMatrix linking;
    int signature = 0;
    LaurentPolynomial alexander;
    std::vector<LaurentPolynomial> component_alexander;
};

Snapshot snapshot(const BandWord& w, SelectionCase kind, Execution mode) {
    Snapshot s;
    const ArtinWord artin = expand_to_artin(w);
    s.euler = euler_characteristic(w);
    s.surface_components = surface_graph(w).component_count();
    s.cycles = underlying_permutation(w).cycles();
    s.component_of_strand.assign(static_cast<std::size_t>(w.strands()) + 1, -1);
    for (std::size_t c = 0; c < s.cycles.size(); ++c)
        for (int x : s.cycles[c]) s.component_of_strand[static_cast<std::size_t>(x)] = static_cast<int>(c);
    s.linking = linking_matrix(artin);
    const SeifertMatrix v = seifert_matrix(artin);
    s.signature = signature(v);
    if (kind == SelectionCase::case2) {
        s.alexander = alexander(v, mode);
    } else {
        for (std::size_t c = 0; c < s.cycles.size(); ++c)
            s.component_alexander.push_back(alexander(seifert_matrix(extract_component(artin, c)), mode));
    }
    return s;
}

}  // namespace

TieResult tie(const AnnulusWord& annulus, const BandWord& target, const BandSelection& selection, int iteration,
              Execution mode) {
    if (!selection_at(target, selection.kind, selection.band)) {
        throw SelectionInvalid(std::string("band ") + std::to_string(selection.band + 1) + " does not have the " +
                               to_string(selection.kind) + " property in the target");
    }
    return certify_tie(annulus, target, selection, tie_word(annulus, target, selection.band), iteration, mode);
}

TieResult certify_tie(const AnnulusWord& annulus, const BandWord& target, const BandSelection& selection,
                      TieWord built, int iteration, Execution mode) {
    const int m = built.word.strands() - target.strands();
    if (m < 0) throw OracleViolation("tied word has fewer strands than the target");

    const Snapshot before = snapshot(target, selection.kind, mode);
    const Snapshot after = snapshot(built.word, selection.kind, mode);

    TieResult result;
    result.annulus = annulus.name;
    result.selection = selection;
    result.iteration = iteration;
    auto record = [&](const char* id, const char* description, bool ok, std::string detail) {
        result.certificate.push_back(
            {id, description, ok ? Assertion::Status::pass : Assertion::Status::fail, std::move(detail)});
    };

    record("a", "Euler characteristic unchanged", before.euler == after.euler,
           std::to_string(before.euler) + " -> " + std::to_string(after.euler));
    record("b", "surface component count unchanged", before.surface_components == after.surface_components,
           std::to_string(before.surface_components) + " -> " + std::to_string(after.surface_components));

    // Target strand s corresponds to strand s + m of the tied word.
    std::vector<int> image(before.cycles.size(), -1);
    std::vector<bool> hit(after.cycles.size(), false);
    bool bijective = before.cycles.size() == after.cycles.size();
    for (std::size_t c = 0; c < before.cycles.size() && bijective; ++c) {
        const int d = after.component_of_strand[static_cast<std::size_t>(before.cycles[c].front() + m)];
        image[c] = d;
        bijective = !hit[static_cast<std::size_t>(d)];
        hit[static_cast<std::size_t>(d)] = true;
        for (int x : before.cycles[c]) bijective = bijective && after.component_of_strand[static_cast<std::size_t>(x + m)] == d;
    }
    record("c", "boundary component count unchanged", bijective,
           std::to_string(before.cycles.size()) + " -> " + std::to_string(after.cycles.size()));

    bool linking_ok = bijective;
    for (std::size_t p = 0; p < before.cycles.size() && linking_ok; ++p)
        for (std::size_t q = 0; q < before.cycles.size(); ++q)
            linking_ok = linking_ok && before.linking(p, q) ==
                                           after.linking(static_cast<std::size_t>(image[p]), static_cast<std::size_t>(image[q]));
    record("d", "linking matrix unchanged", linking_ok, linking_ok ? "equal" : "differs");
    record("e", "signature unchanged", before.signature == after.signature,
           std::to_string(before.signature) + " -> " + std::to_string(after.signature));

    if (selection.kind == SelectionCase::case2) {
        record("f", "Alexander polynomial unchanged", associates(before.alexander, after.alexander),
               before.alexander.to_string() + " -> " + after.alexander.to_string());
    } else {
        bool ok = bijective;
        std::string detail;
        for (std::size_t c = 0; c < before.cycles.size() && ok; ++c) {
            const bool affected = static_cast<int>(c) == selection.boundary_component[0] ||
                                  static_cast<int>(c) == selection.boundary_component[1];
            const LaurentPolynomial expected =
                affected ? before.component_alexander[c] * annulus.companion_alexander : before.component_alexander[c];
            const LaurentPolynomial& got = after.component_alexander[static_cast<std::size_t>(image[c])];
            ok = associates(expected, got);
            if (!detail.empty()) detail += "; ";
            detail += "component " + std::to_string(c + 1) + ": " + got.normalized().to_string();
        }
        record("f", "affected components gain the companion factor", ok, detail);
    }

    for (const Assertion& a : result.certificate) {
        if (a.status == Assertion::Status::fail) {
            throw OracleViolation("tie post-condition (" + a.id + ") failed: " + a.description + " [" + a.detail +
                                  "] for target " + to_string(target));
        }
    }
    result.word = std::move(built.word);
    result.relocation = std::move(built.relocation);
    result.marked = built.marked;
    return result;
}

std::vector<FamilyMember> family(const BandWord& target, int count, const AnnulusWord& annulus, Execution mode) {
    if (count < 0) throw InputError("family size must be non-negative");
    std::vector<FamilyMember> members;
    members.push_back({0, target, classify_and_select(target), std::nullopt});
    for (int i = 1; i <= count; ++i) {
        const FamilyMember& prev = members.back();
        TieResult t = tie(annulus, prev.word, prev.selection, i, mode);
        BandSelection next = persistent_selection(prev.selection, t.word, t.relocation);
        t.certificate.push_back({"g", "selected band persists in the tied word", Assertion::Status::pass,
                                 "band " + std::to_string(next.band + 1)});
        BandWord word = t.word;
        members.push_back({i, std::move(word), next, std::move(t)});
    }
    return members;
}

int tb_connected_sum(const std::vector<int>& values) {
    if (values.empty()) throw InputError("TB fold needs at least one value");
    int tb = values.front();
    for (std::size_t k = 1; k < values.size(); ++k) tb = tb + values[k] + 1;
    return tb;
}

}  // namespace sqp
