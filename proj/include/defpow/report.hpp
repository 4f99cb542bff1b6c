#ifndef DEFPOW_REPORT_HPP
#define DEFPOW_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "defpow/verdict.hpp"

namespace defpow {

// One verified claim instance. `cite` is a tag resolvable in docs/claims.md.
struct SuiteCase {
    std::string id;
    std::string claim;
    std::string cite;
    std::string outcome;  // confirmed | refuted-as-expected | unknown | failed
    std::string evidence;
    long long ms = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCase> cases;
    int confirmed = 0;
    int refuted_expected = 0;
    int unknown = 0;
    int failed = 0;

    // counterexamples are first-class: an expected False that comes back
    // False counts as refuted-as-expected, anything off-script fails
    void record(const std::string& id, const std::string& claim, const std::string& cite, TV expected,
                const Verdict& actual, long long ms = 0) {
        SuiteCase c{id, claim, cite, "failed", actual.is_unknown() ? actual.budget_note : actual.evidence,
                    ms};
        if (actual.tv == expected) {
            switch (expected) {
                case TV::True: c.outcome = "confirmed"; ++confirmed; break;
                case TV::False: c.outcome = "refuted-as-expected"; ++refuted_expected; break;
                case TV::Unknown: c.outcome = "unknown"; ++unknown; break;
            }
        } else {
            ++failed;
        }
        cases.push_back(std::move(c));
    }

    void record_bool(const std::string& id, const std::string& claim, const std::string& cite, bool ok,
                     const std::string& evidence, long long ms = 0) {
        record(id, claim, cite, TV::True, ok ? verdict_true(evidence) : verdict_false(evidence), ms);
    }

    bool passed() const { return failed == 0; }
};

inline nlohmann::ordered_json report_to_json(const SuiteReport& r, bool with_timings = false) {
    nlohmann::ordered_json out;
    out["suite"] = r.suite;
    out["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : r.cases) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["claim"] = c.claim;
        jc["cite"] = c.cite;
        jc["verdict"] = c.outcome;
        jc["evidence"] = c.evidence;
        if (with_timings) jc["ms"] = c.ms;
        out["cases"].push_back(std::move(jc));
    }
    out["summary"] = {{"confirmed", r.confirmed},
                      {"refuted-as-expected", r.refuted_expected},
                      {"unknown", r.unknown},
                      {"failed", r.failed}};
    return out;
}

inline std::string report_to_text(const SuiteReport& r) {
    std::string out = "suite " + r.suite + "\n";
    for (const auto& c : r.cases) {
        out += "  [" + c.outcome + "] " + c.id + ": " + c.claim + " (" + c.cite + ")";
        if (!c.evidence.empty()) out += " -- " + c.evidence;
        out += "\n";
    }
    out += "summary: " + std::to_string(r.confirmed) + " confirmed, " +
           std::to_string(r.refuted_expected) + " refuted-as-expected, " + std::to_string(r.unknown) +
           " unknown, " + std::to_string(r.failed) + " failed\n";
    return out;
}

// claim-by-claim markdown table over merged JSON reports
inline std::string reports_to_markdown(const std::vector<nlohmann::ordered_json>& reports) {
    std::string out = "| suite | case | claim | cite | verdict |\n|---|---|---|---|---|\n";
    std::string totals;
    for (const auto& r : reports) {
        std::string suite = r.value("suite", "?");
        for (const auto& c : r.at("cases")) {
            out += "| " + suite + " | " + c.value("id", "") + " | " + c.value("claim", "") + " | " +
                   c.value("cite", "") + " | " + c.value("verdict", "") + " |\n";
        }
        const auto& s = r.at("summary");
        totals += "- " + suite + ": " + std::to_string(s.value("confirmed", 0)) + " confirmed, " +
                  std::to_string(s.value("refuted-as-expected", 0)) + " refuted-as-expected, " +
                  std::to_string(s.value("unknown", 0)) + " unknown, " +
                  std::to_string(s.value("failed", 0)) + " failed\n";
    }
    return out + "\n" + totals;
}

}  // namespace defpow

#endif
