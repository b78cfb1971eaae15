// Command line front end. Exit codes: 0 success, 1 input error, 2 a recorded
// assertion failed, 3 an oracle post-condition was violated.
#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "sqp/acceptance.hpp"
#include "sqp/errors.hpp"
#include "sqp/report.hpp"
#include "sqp/svg.hpp"

namespace {

using nlohmann::json;

enum Exit { ok = 0, input_error = 1, assertion_failed = 2, oracle_violation = 3 };

struct WordArgs {
    std::string word;
    int strands = 0;
    bool artin = false;
};

void add_word_options(CLI::App* cmd, WordArgs& args) {
    cmd->add_option("word", args.word, "braid word: b(i,j) tokens, or s<k>/S<k> with --artin")->required();
    cmd->add_option("-n,--strands", args.strands, "strand count (default: largest index used)");
    cmd->add_flag("--artin", args.artin, "read the word as signed Artin generators");
}

// Smallest strand count that fits every index in the word.
int infer_strands(const std::string& text, bool artin) {
    int top = 1;
    std::size_t pos = 0;
    while ((pos = text.find_first_of("0123456789", pos)) != std::string::npos) {
        std::size_t end = text.find_first_not_of("0123456789", pos);
        top = std::max(top, std::stoi(text.substr(pos, end - pos)) + (artin ? 1 : 0));
        pos = end == std::string::npos ? text.size() : end;
    }
    return top;
}

int strands_for(const WordArgs& a) { return a.strands > 0 ? a.strands : infer_strands(a.word, a.artin); }

sqp::AnnulusWord annulus_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sqp::InputError("cannot open annulus file " + path);
    json j;
    try {
        j = json::parse(in);
        sqp::AnnulusWord a;
        a.name = j.value("name", path);
        a.word = sqp::parse_band_word(j.at("word").get<std::string>(), j.at("strands").get<int>());
        const auto designated = j.at("designated").get<std::size_t>();
        if (designated < 1) throw sqp::InputError("designated band position is 1-based");
        a.designated = designated - 1;
        a.companion = j.value("companion", std::string("unspecified"));
        a.companion_alexander = j.at("companion_alexander").get<sqp::LaurentPolynomial>();
        a.linking = j.value("linking", 1);
        return a;
    } catch (const json::exception& e) {
        throw sqp::InputError("annulus file " + path + ": " + e.what());
    }
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_validate(const WordArgs& args, bool as_json) {
    const int n = strands_for(args);
    json out{{"strands", n}};
    if (args.artin) {
        const sqp::ArtinWord w = sqp::parse_artin_word(args.word, n);
        out["syntax"] = "artin";
        out["length"] = w.length();
        out["components"] = sqp::underlying_permutation(w).cycle_count();
    } else {
        const sqp::BandWord w = sqp::parse_band_word(args.word, n);
        out["syntax"] = "band";
        out["surface"] = sqp::surface_json(w);
    }
    if (as_json) {
        print_json(out);
    } else {
        std::cout << "valid " << out["syntax"].get<std::string>() << " word on " << n << " strands\n";
        if (out.contains("surface")) std::cout << out["surface"].dump(2) << '\n';
    }
    return ok;
}

int run_invariants(const WordArgs& args, const sqp::ReportOptions& ro, bool as_json, const std::string& svg) {
    const int n = strands_for(args);
    const auto start = std::chrono::steady_clock::now();
    sqp::InvariantReport r;
    if (args.artin) {
        r = sqp::full_report(sqp::parse_artin_word(args.word, n), ro);
    } else {
        const sqp::BandWord w = sqp::parse_band_word(args.word, n);
        r = sqp::full_report(w, ro);
        if (!svg.empty()) {
            std::ofstream(svg) << sqp::band_diagram_svg(w);
        }
    }
    sqp::check_consistency(r);
    if (as_json) {
        sqp::ReportEnvelope env;
        env.subcommand = "invariants";
        env.inputs.push_back({args.word, n, args.artin ? "artin" : "band"});
        env.reports.push_back(r);
        env.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        print_json(env);
    } else {
        std::cout << sqp::render_text(r);
    }
    return ok;
}

int run_family(const WordArgs& args, int count, const std::string& annulus_name, const sqp::ReportOptions& ro,
               bool as_json) {
    if (args.artin) throw sqp::InputError("family seeds must be band words");
    const sqp::BandWord seed = sqp::parse_band_word(args.word, strands_for(args));
    sqp::AnnulusWord annulus;
    if (annulus_name == "bundled") {
        annulus = sqp::bundled_alpha();
    } else if (annulus_name == "trivial") {
        annulus = sqp::trivial_annulus();
    } else {
        annulus = annulus_from_file(annulus_name);
    }
    const auto start = std::chrono::steady_clock::now();
    sqp::ReportEnvelope env;
    env.subcommand = "family";
    env.inputs.push_back({args.word, seed.strands(), "band"});
    env.family = sqp::family_report(seed, count, annulus, ro);
    env.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (as_json) {
        print_json(env);
    } else {
        for (const auto& m : env.family) {
            std::cout << "== member " << m.iteration << " (" << m.strands << " strands, " << m.provenance << ")\n"
                      << m.word << '\n'
                      << "next band " << m.selection.band + 1 << " (" << sqp::to_string(m.selection.kind) << ")\n"
                      << sqp::render_text(m.report);
            for (const auto& a : m.certificate) {
                std::cout << "  (" << a.id << ") " << sqp::to_string(a.status) << "  " << a.description;
                if (!a.detail.empty()) std::cout << ": " << a.detail;
                std::cout << '\n';
            }
        }
    }
    return sqp::all_hold(env) ? ok : assertion_failed;
}

int run_selftest(const sqp::AcceptanceOptions& options, bool as_json) {
    std::vector<sqp::CriterionResult> results = sqp::run_acceptance(options);
    results.push_back(sqp::replay_corpus(options));
    bool all = true;
    json out = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        if (as_json) {
            out.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                           {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}});
        } else {
            std::cout << sqp::format_result(r) << '\n';
        }
    }
    if (as_json) print_json({{"schema_version", sqp::schema_version}, {"tool_version", sqp::tool_version}, {"criteria", out}});
    return all ? ok : assertion_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strongly quasipositive braid toolkit"};
    app.set_version_flag("--version", sqp::tool_version);
    app.require_subcommand(1);

    bool as_json = false;
    bool serial = false;
    app.add_flag("--json", as_json, "emit a versioned JSON envelope");
    app.add_flag("--serial", serial, "use the serial kernels");

    WordArgs validate_args, invariants_args, family_args;
    auto* validate = app.add_subcommand("validate", "parse a word and describe its canonical surface");
    add_word_options(validate, validate_args);

    sqp::ReportOptions ro;
    ro.with_jones = false;
    std::string svg;
    auto* invariants = app.add_subcommand("invariants", "link invariants of a braid closure");
    add_word_options(invariants, invariants_args);
    invariants->add_flag("--with-jones", ro.with_jones, "also compute the Jones polynomial");
    invariants->add_option("--budget", ro.jones_budget, "largest strand count for the Jones kernel");
    invariants->add_option("--svg", svg, "write a band diagram to this file (band words only)");

    int count = 3;
    std::string annulus = "bundled";
    bool no_jones = false;
    int family_budget = sqp::default_jones_budget;
    auto* fam = app.add_subcommand("family", "iterate the annulus tie from a seed word");
    add_word_options(fam, family_args);
    fam->add_option("-c,--count", count, "number of iterations")->check(CLI::Range(0, 64));
    fam->add_option("--annulus", annulus, "bundled, trivial, or a JSON file");
    fam->add_flag("--no-jones", no_jones, "skip the Jones polynomial");
    fam->add_option("--budget", family_budget, "largest strand count for the Jones kernel");

    sqp::AcceptanceOptions acceptance;
    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria and the corpus replay");
    selftest->add_option("--budget", acceptance.jones_budget, "largest strand count for the Jones kernel");
    selftest->add_option("--corpus", acceptance.corpus_dir, "corpus directory");
    selftest->add_option("--alpha", acceptance.alpha_override, "replace the bundled annulus word")->group("");

    for (auto* sub : {validate, invariants, fam, selftest}) sub->add_flag("--json", as_json, "emit JSON");

    CLI11_PARSE(app, argc, argv);
    const sqp::Execution mode = serial ? sqp::Execution::serial : sqp::Execution::parallel;
    ro.mode = mode;
    acceptance.mode = mode;

    try {
        if (*validate) return run_validate(validate_args, as_json);
        if (*invariants) return run_invariants(invariants_args, ro, as_json, svg);
        if (*fam) {
            const sqp::ReportOptions fo{!no_jones, family_budget, mode};
            return run_family(family_args, count, annulus, fo, as_json);
        }
        return run_selftest(acceptance, as_json);
    } catch (const sqp::UnlinkInput& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "The canonical surface is a union of disks, so the closure is an unlink. As a knot that is the\n"
                     "unknot, the one strongly quasipositive knot that is slice, and no band can be selected.\n";
        return input_error;
    } catch (const sqp::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    } catch (const sqp::OracleViolation& e) {
        std::cerr << "oracle violation: " << e.what() << '\n';
        return oracle_violation;
    } catch (const sqp::Error& e) {
        std::cerr << "assertion failed: " << e.what() << '\n';
        return assertion_failed;
    }
}
