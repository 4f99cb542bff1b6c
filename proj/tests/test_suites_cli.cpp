#include "doctest.h"

#include "defpow/report.hpp"
#include "defpow/suites.hpp"

using namespace defpow;

TEST_CASE("the registry carries the documented suites") {
    std::set<std::string> expected{"basic-lemma", "redunits",  "bivalente",    "cmdiv",  "constantfn",
                                   "sumnonunits", "lpow-x",    "TU",           "powconst", "extract",
                                   "theta",       "char-p",    "lpow-further", "equivalences", "zxz",
                                   "zk",          "qplane",    "diagram"};
    std::set<std::string> got;
    for (auto& [name, fn] : suite_registry()) got.insert(name);
    CHECK(got == expected);
    CHECK_THROWS_AS((void)run_suite("nope", Budget{}, 1), BadSpecError);
}

TEST_CASE("light suites pass with no failed cases") {
    Budget budget;
    for (const auto& name : {"basic-lemma", "redunits", "bivalente", "cmdiv", "constantfn",
                             "sumnonunits", "TU", "powconst", "extract", "theta", "char-p",
                             "lpow-further", "equivalences", "zxz", "zk", "diagram"}) {
        auto rep = run_suite(name, budget, 12345);
        CHECK_MESSAGE(rep.failed == 0, name);
        CHECK(!rep.cases.empty());
        for (const auto& c : rep.cases) {
            CHECK(!c.cite.empty());  // every case cites a claim in docs/claims.md
            CHECK(!c.id.empty());
        }
    }
}

TEST_CASE("suite reports are byte-identical across runs with the same seed") {
    Budget budget;
    for (const auto& name : {"theta", "zxz", "basic-lemma"}) {
        auto a = report_to_json(run_suite(name, budget, 777)).dump(2);
        auto b = report_to_json(run_suite(name, budget, 777)).dump(2);
        CHECK_MESSAGE(a == b, name);
    }
}

TEST_CASE("report schema and markdown merge") {
    Budget budget;
    auto rep = run_suite("theta", budget, 12345);
    auto j = report_to_json(rep);
    CHECK(j.contains("suite"));
    CHECK(j.contains("cases"));
    CHECK(j.contains("summary"));
    CHECK(j["summary"].contains("confirmed"));
    CHECK(j["summary"].contains("refuted-as-expected"));
    CHECK(!j["cases"].empty());
    CHECK(!j["cases"][0].contains("ms"));  // timings only on request
    auto with_ms = report_to_json(rep, true);
    CHECK(with_ms["cases"][0].contains("ms"));

    auto md = reports_to_markdown({j, report_to_json(run_suite("zk", budget, 12345))});
    CHECK(md.find("| theta |") != std::string::npos);
    CHECK(md.find("| zk |") != std::string::npos);
    CHECK(md.find("integer-sentence") != std::string::npos);  // citations survive the merge
}

TEST_CASE("counterexamples are first class: an unexpected True fails the suite") {
    SuiteReport rep{"demo"};
    rep.record("a", "claim", "cite", TV::False, verdict_false("expected refutation"));
    CHECK(rep.refuted_expected == 1);
    CHECK(rep.passed());
    rep.record("b", "claim", "cite", TV::False, verdict_true("surprise"));
    CHECK(rep.failed == 1);
    CHECK(!rep.passed());
}
