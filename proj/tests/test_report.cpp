#include <doctest.h>

#include <fstream>

#include "helpers.hpp"
#include "sqp/acceptance.hpp"
#include "sqp/corpus.hpp"
#include "sqp/errors.hpp"
#include "sqp/report.hpp"
#include "sqp/svg.hpp"

using namespace sqp;

TEST_CASE("Laurent JSON keeps big coefficients exact") {
    const LaurentPolynomial p = LaurentPolynomial::monomial(mpz_class("123456789012345678901234567890"), -3) + LaurentPolynomial::monomial(-7, 2);
    const nlohmann::json j = p;
    CHECK(j.get<LaurentPolynomial>() == p);
}

TEST_CASE("envelope round trip") {
    ReportEnvelope env;
    env.subcommand = "family";
    env.inputs.push_back({"b(1,2) b(1,2)", 2, "band"});
    env.family = family_report(BandWord(2, {{1, 2}, {1, 2}}), 1, bundled_alpha(), ReportOptions{});
    env.seconds = 0.25;
    const nlohmann::json j = env;
    const ReportEnvelope back = j.get<ReportEnvelope>();
    CHECK(back.inputs == env.inputs);
    REQUIRE(back.family.size() == 2);
    CHECK(back.family[1].report == env.family[1].report);
    CHECK(back.family[1].selection == env.family[1].selection);
    CHECK(nlohmann::json(back) == j);

    nlohmann::json future = j;
    future["schema_version"] = schema_version + 1;
    CHECK_THROWS_AS(future.get<ReportEnvelope>(), InputError);
}

TEST_CASE("distinctness assertion on the families") {
    const auto hopf = family_report(BandWord(2, {{1, 2}, {1, 2}}), 2, bundled_alpha(), ReportOptions{});
    const auto trefoil = family_report(BandWord(2, {{1, 2}, {1, 2}, {1, 2}}), 2, bundled_alpha(), ReportOptions{});
    auto last_status = [](const FamilyEntry& e) { return e.certificate.back().status; };
    CHECK(last_status(hopf[2]) == Assertion::Status::pass);
    // Member 1 is told apart by Jones; member 2 has 18 strands, beyond the kernel budget.
    CHECK(last_status(trefoil[1]) == Assertion::Status::pass);
    CHECK(last_status(trefoil[2]) == Assertion::Status::paper_cited);
}

TEST_CASE("corpus entries reproduce their sidecars") {
    const CriterionResult r = replay_corpus(AcceptanceOptions{});
    CHECK_MESSAGE(r.passed, r.detail);
}

TEST_CASE("corpus loader rejects malformed lines") {
    const auto dir = std::filesystem::temp_directory_path() / "sqp_corpus_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "corpus.txt") << "# comment\nok 2 b(1,2)\nbad 2 b(1,3)\n";
    }
    CHECK_THROWS_AS(load_corpus(dir / "corpus.txt"), InputError);
    CHECK_THROWS_AS(load_corpus(dir / "missing.txt"), InputError);
}

TEST_CASE("acceptance criteria react to a replaced annulus") {
    AcceptanceOptions options;
    options.alpha_override = "b(1,2) b(1,2) b(3,4) b(5,6) b(7,8)";
    CHECK_FALSE(run_criterion(1, options).passed);
    CHECK_FALSE(run_criterion(5, options).passed);
    CHECK(run_criterion(8, options).passed);
    CHECK_THROWS_AS(run_criterion(9, options), InputError);
}

TEST_CASE("band diagram") {
    const std::string svg = band_diagram_svg(parse_band_word(testing::alpha_text, 8));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
}
