#include "sqp/report.hpp"

#include <algorithm>
#include <sstream>

#include "sqp/errors.hpp"

namespace sqp {

using nlohmann::json;

namespace {

json integer_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

mpz_class integer_from_json(const json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(j.get<long>());
}

std::vector<std::string> sorted_polys(const std::vector<LaurentPolynomial>& polys) {
    std::vector<std::string> out;
    for (const auto& p : polys) out.push_back(p.normalized().to_string());
    std::sort(out.begin(), out.end());
    return out;
}

// Some invariant computed for both reports tells them apart.
bool distinguished(const InvariantReport& a, const InvariantReport& b) {
    if (a.components != b.components || a.signature != b.signature) return true;
    if (!associates(a.alexander, b.alexander)) return true;
    if (sorted_polys(a.component_alexander) != sorted_polys(b.component_alexander)) return true;
    return a.jones && b.jones && !(*a.jones == *b.jones);
}

}  // namespace

std::vector<FamilyEntry> family_report(const BandWord& seed, int count, const AnnulusWord& annulus,
                                       const ReportOptions& options) {
    validate_annulus(annulus);
    std::vector<FamilyEntry> out;
    for (FamilyMember& m : family(seed, count, annulus, options.mode)) {
        FamilyEntry e;
        e.iteration = m.iteration;
        e.word = to_string(m.word);
        e.strands = m.word.strands();
        e.selection = m.selection;
        e.report = full_report(m.word, options);
        if (m.tie) {
            e.provenance = "tie(" + annulus.name + ", " + to_string(m.tie->selection.kind) + " band " +
                           std::to_string(m.tie->selection.band + 1) + ") of member " + std::to_string(m.iteration - 1);
            e.certificate = m.tie->certificate;
            std::vector<int> unresolved;
            for (const FamilyEntry& earlier : out)
                if (!distinguished(earlier.report, e.report)) unresolved.push_back(earlier.iteration);
            Assertion n{"n", "not isotopic to any earlier member", Assertion::Status::pass, ""};
            if (unresolved.empty()) {
                n.detail = "machine-checked by computed invariants";
            } else if (m.tie->selection.kind == SelectionCase::case2) {
                n.status = Assertion::Status::paper_cited;
                n.detail = "no computed invariant separates it from member(s)";
                for (int i : unresolved) n.detail += " " + std::to_string(i);
                n.detail += "; non-isotopy taken from the satellite argument, not machine-checked";
            } else {
                n.status = Assertion::Status::fail;
                n.detail = "Case 1 component polynomials failed to separate members";
            }
            e.certificate.push_back(std::move(n));
        } else {
            e.provenance = "seed";
        }
        out.push_back(std::move(e));
    }
    return out;
}

bool all_hold(const std::vector<Assertion>& assertions) {
    return std::none_of(assertions.begin(), assertions.end(),
                        [](const Assertion& a) { return a.status == Assertion::Status::fail; });
}

bool all_hold(const ReportEnvelope& e) {
    if (!all_hold(e.assertions)) return false;
    return std::all_of(e.family.begin(), e.family.end(), [](const FamilyEntry& f) { return all_hold(f.certificate); });
}

void to_json(json& j, const LaurentPolynomial& p) {
    j = json::array();
    for (const auto& [e, c] : p.terms()) j.push_back(json::array({e, integer_json(c)}));
}

void from_json(const json& j, LaurentPolynomial& p) {
    p = LaurentPolynomial();
    for (const auto& term : j) p += LaurentPolynomial::monomial(integer_from_json(term.at(1)), term.at(0).get<int>());
}

void to_json(json& j, const IntMatrix& m) {
    j = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        j.push_back(std::move(row));
    }
}

void from_json(const json& j, IntMatrix& m) {
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j.at(0).size() : 0;
    m = IntMatrix(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (j.at(r).size() != cols) throw InputError("ragged matrix in JSON");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<std::int64_t>();
    }
}

void to_json(json& j, const InvariantReport& r) {
    j = json{{"strands", r.strands},
             {"components", r.components},
             {"euler", r.euler ? json(*r.euler) : json(nullptr)},
             {"first_betti", r.first_betti ? json(*r.first_betti) : json(nullptr)},
             {"linking", r.linking},
             {"alexander", r.alexander},
             {"signature", r.signature},
             {"determinant", integer_json(r.determinant)},
             {"jones", r.jones ? json(*r.jones) : json(nullptr)},
             {"jones_exponent_unit", "t^(1/2)"},
             {"jones_over_budget", r.jones_over_budget},
             {"jones_budget", r.jones_budget},
             {"component_alexander", r.component_alexander}};
    json slice = json::array();
    for (const auto& f : r.component_slice)
        slice.push_back({{"unit_at_one", f.unit_at_one}, {"square_determinant", f.square_determinant}});
    j["component_slice"] = std::move(slice);
}

void from_json(const json& j, InvariantReport& r) {
    r = InvariantReport();
    r.strands = j.at("strands").get<int>();
    r.components = j.at("components").get<std::size_t>();
    if (!j.at("euler").is_null()) r.euler = j.at("euler").get<int>();
    if (!j.at("first_betti").is_null()) r.first_betti = j.at("first_betti").get<int>();
    r.linking = j.at("linking").get<IntMatrix>();
    r.alexander = j.at("alexander").get<LaurentPolynomial>();
    r.signature = j.at("signature").get<int>();
    r.determinant = integer_from_json(j.at("determinant"));
    if (!j.at("jones").is_null()) r.jones = j.at("jones").get<LaurentPolynomial>();
    r.jones_over_budget = j.at("jones_over_budget").get<bool>();
    r.jones_budget = j.at("jones_budget").get<int>();
    r.component_alexander = j.at("component_alexander").get<std::vector<LaurentPolynomial>>();
    for (const auto& f : j.at("component_slice"))
        r.component_slice.push_back({f.at("unit_at_one").get<bool>(), f.at("square_determinant").get<bool>()});
}

void to_json(json& j, const BandSelection& s) {
    j = json{{"case", to_string(s.kind)},
             {"band_position", s.band + 1},
             {"surface_component", s.surface_component},
             {"boundary_components", json::array({s.boundary_component[0], s.boundary_component[1]})}};
}

void from_json(const json& j, BandSelection& s) {
    const auto kind = j.at("case").get<std::string>();
    if (kind != "case1" && kind != "case2") throw InputError("unknown selection case '" + kind + "'");
    s.kind = kind == "case1" ? SelectionCase::case1 : SelectionCase::case2;
    s.band = j.at("band_position").get<std::size_t>() - 1;
    s.surface_component = j.at("surface_component").get<int>();
    s.boundary_component[0] = j.at("boundary_components").at(0).get<int>();
    s.boundary_component[1] = j.at("boundary_components").at(1).get<int>();
}

void to_json(json& j, const Assertion& a) {
    j = json{{"id", a.id}, {"description", a.description}, {"status", to_string(a.status)}, {"detail", a.detail}};
}

void from_json(const json& j, Assertion& a) {
    a.id = j.at("id").get<std::string>();
    a.description = j.at("description").get<std::string>();
    a.detail = j.at("detail").get<std::string>();
    const auto status = j.at("status").get<std::string>();
    if (status == "pass") {
        a.status = Assertion::Status::pass;
    } else if (status == "fail") {
        a.status = Assertion::Status::fail;
    } else if (status == "paper-cited") {
        a.status = Assertion::Status::paper_cited;
    } else {
        throw InputError("unknown assertion status '" + status + "'");
    }
}

void to_json(json& j, const WordInput& w) { j = json{{"word", w.word}, {"strands", w.strands}, {"syntax", w.syntax}}; }

void from_json(const json& j, WordInput& w) {
    w.word = j.at("word").get<std::string>();
    w.strands = j.at("strands").get<int>();
    w.syntax = j.at("syntax").get<std::string>();
}

void to_json(json& j, const FamilyEntry& f) {
    j = json{{"iteration", f.iteration}, {"word", f.word},       {"strands", f.strands},
             {"provenance", f.provenance}, {"selection", f.selection}, {"report", f.report},
             {"certificate", f.certificate}};
}

void from_json(const json& j, FamilyEntry& f) {
    f.iteration = j.at("iteration").get<int>();
    f.word = j.at("word").get<std::string>();
    f.strands = j.at("strands").get<int>();
    f.provenance = j.at("provenance").get<std::string>();
    f.selection = j.at("selection").get<BandSelection>();
    f.report = j.at("report").get<InvariantReport>();
    f.certificate = j.at("certificate").get<std::vector<Assertion>>();
}

void to_json(json& j, const ReportEnvelope& e) {
    j = json{{"schema_version", e.schema}, {"tool_version", e.version}, {"subcommand", e.subcommand},
             {"inputs", e.inputs},         {"reports", e.reports},      {"family", e.family},
             {"assertions", e.assertions}, {"seconds", e.seconds}};
}

void from_json(const json& j, ReportEnvelope& e) {
    e.schema = j.at("schema_version").get<int>();
    if (e.schema != schema_version) {
        throw InputError("report schema " + std::to_string(e.schema) + " is not supported (expected " +
                         std::to_string(schema_version) + ")");
    }
    e.version = j.at("tool_version").get<std::string>();
    e.subcommand = j.at("subcommand").get<std::string>();
    e.inputs = j.at("inputs").get<std::vector<WordInput>>();
    e.reports = j.at("reports").get<std::vector<InvariantReport>>();
    e.family = j.at("family").get<std::vector<FamilyEntry>>();
    e.assertions = j.at("assertions").get<std::vector<Assertion>>();
    e.seconds = j.at("seconds").get<double>();
}

json surface_json(const BandWord& w) {
    const SurfaceGraph g = surface_graph(w);
    const BoundaryTrace trace = trace_boundary(w);
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
    json vertex_component = json::array();
    for (int v = 1; v <= g.vertex_count(); ++v) vertex_component.push_back(g.component_of_vertex(v));
    json boundary = json::array();
    for (const auto& comp : trace.components) {
        json arcs = json::array();
        for (const auto& arc : comp) {
            if (arc.kind == BoundaryArc::Kind::band_side) {
                arcs.push_back({{"kind", "band_side"}, {"band", arc.band + 1}, {"side", arc.side}, {"from_disk", arc.disk}});
            } else if (arc.full_circle) {
                arcs.push_back({{"kind", "disk_circle"}, {"disk", arc.disk}});
            } else {
                arcs.push_back({{"kind", "disk_edge"}, {"disk", arc.disk}, {"until_band", arc.band + 1}});
            }
        }
        boundary.push_back(std::move(arcs));
    }
    json sides = json::array();
    for (const auto& s : trace.band_side_component) sides.push_back(json::array({s[0], s[1]}));
    json genus = json::array();
    for (const auto& entry : genus_profile(w)) {
        genus.push_back({{"component", entry.component},
                         {"euler", entry.euler},
                         {"genus", entry.genus},
                         {"boundary_count", entry.boundary_count}});
    }
    return json{{"vertices", g.vertex_count()},
                {"edges", edges},
                {"vertex_component", vertex_component},
                {"bridges", g.bridges()},
                {"boundary", boundary},
                {"band_sides", sides},
                {"genus_profile", genus}};
}

bool operator==(const InvariantReport& a, const InvariantReport& b) {
    return a.strands == b.strands && a.components == b.components && a.euler == b.euler &&
           a.first_betti == b.first_betti && a.linking == b.linking && a.alexander == b.alexander &&
           a.signature == b.signature && a.determinant == b.determinant && a.jones == b.jones &&
           a.jones_over_budget == b.jones_over_budget && a.jones_budget == b.jones_budget &&
           a.component_alexander == b.component_alexander && a.component_slice == b.component_slice;
}

std::string render_text(const InvariantReport& r) {
    std::ostringstream out;
    out << "strands      " << r.strands << '\n' << "components   " << r.components << '\n';
    if (r.euler) out << "euler        " << *r.euler << '\n';
    if (r.first_betti) out << "first betti  " << *r.first_betti << '\n';
    if (r.components > 1) {
        out << "linking     ";
        for (std::size_t p = 0; p < r.components; ++p) {
            out << " [";
            for (std::size_t q = 0; q < r.components; ++q) out << (q ? " " : "") << r.linking(p, q);
            out << ']';
        }
        out << '\n';
    }
    out << "alexander    " << r.alexander.to_string() << '\n'
        << "signature    " << r.signature << '\n'
        << "determinant  " << r.determinant.get_str() << '\n';
    if (r.jones) {
        out << "jones        " << r.jones->to_string("t", true) << '\n';
    } else if (r.jones_over_budget) {
        out << "jones        skipped (" << r.strands << " strands > budget " << r.jones_budget << ")\n";
    }
    for (std::size_t c = 0; c < r.component_alexander.size(); ++c) {
        const SliceFlags& f = r.component_slice[c];
        out << "component " << c + 1 << "  " << r.component_alexander[c].to_string()
            << "  (Delta(1)=+-1: " << (f.unit_at_one ? "yes" : "no")
            << ", square determinant: " << (f.square_determinant ? "yes" : "no") << ")\n";
    }
    return out.str();
}

}  // namespace sqp
