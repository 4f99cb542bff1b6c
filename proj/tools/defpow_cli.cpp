// defpow: evaluate first-order ring sentences over the catalog structures and
// run the named verification suites.
//
// exit codes for `eval`: 0 = True, 1 = False, 2 = Unknown, >2 = error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "defpow/named_formulas.hpp"
#include "defpow/report.hpp"
#include "defpow/suites.hpp"

using namespace defpow;

namespace {

struct CommonOpts {
    std::string config_file;
    Budget budget;
    unsigned seed = 12345;
    bool timings = false;
    std::map<std::string, std::string> ring_aliases;
};

void add_budget_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--deg-box", opts.budget.deg_box, "degree bound for polynomial witness boxes");
    cmd->add_option("--coeff-box", opts.budget.coeff_bound,
                    "coefficient boxes range over [-N, N] (default 3)");
    cmd->add_option("--exp-cap", opts.budget.exp_cap, "exponent cap for power searches (default 8)");
    cmd->add_option("--int-box", opts.budget.int_bound,
                    "ring element boxes range over [-N, N] (default 6)");
    cmd->add_option("--steps", opts.budget.step_limit, "candidate cap for one bounded search");
    cmd->add_option(
        "--divisor-box",
        [&opts](const std::vector<std::string>& vals) {
            for (const auto& v : vals) {
                if (v.rfind("deg=", 0) == 0) opts.budget.deg_box = std::stoi(v.substr(4));
                else return false;
            }
            return true;
        },
        "divisor quantifier box, e.g. deg=3");
    cmd->add_option("--seed", opts.seed, "seed for randomized suites (env DEFPOW_SEED)");
    cmd->add_option("--config", opts.config_file, "JSON config with budgets and ring aliases");
    cmd->add_flag("--timings", opts.timings, "include per-case runtimes in JSON reports");
}

void load_config(CommonOpts& opts) {
    if (const char* env = std::getenv("DEFPOW_SEED")) opts.seed = static_cast<unsigned>(std::stoul(env));
    if (opts.config_file.empty()) return;
    std::ifstream in(opts.config_file);
    if (!in) throw BadSpecError("cannot open config file " + opts.config_file);
    nlohmann::json cfg = nlohmann::json::parse(in);
    if (cfg.contains("budgets")) {
        const auto& b = cfg["budgets"];
        opts.budget.deg_box = b.value("deg-box", opts.budget.deg_box);
        opts.budget.coeff_bound = b.value("coeff-box", opts.budget.coeff_bound);
        opts.budget.exp_cap = b.value("exp-cap", opts.budget.exp_cap);
        opts.budget.int_bound = b.value("int-box", opts.budget.int_bound);
        opts.budget.step_limit = b.value("steps", opts.budget.step_limit);
    }
    if (cfg.contains("rings"))
        for (auto& [alias, spec] : cfg["rings"].items())
            opts.ring_aliases[alias] = spec.get<std::string>();
    if (cfg.contains("seed")) opts.seed = cfg["seed"].get<unsigned>();
}

std::string resolve_ring(const CommonOpts& opts, const std::string& spec) {
    auto it = opts.ring_aliases.find(spec);
    return it == opts.ring_aliases.end() ? spec : it->second;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for logical powers and integer definability"};
    app.require_subcommand(1);

    CommonOpts opts;

    // --- eval ---------------------------------------------------------------
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a sentence over a structure");
    std::string ring_spec, formula_text, json_out;
    eval_cmd->add_option("-r,--ring", ring_spec, "structure spec (ring, poly:<ring>, qplane:...)")
        ->required();
    eval_cmd->add_option("-f,--formula", formula_text, "sentence in the ASCII grammar")->required();
    eval_cmd->add_option("--json", json_out, "also write the verdict as JSON");
    add_budget_flags(eval_cmd, opts);

    // --- suite --------------------------------------------------------------
    auto* suite_cmd = app.add_subcommand("suite", "run a named verification suite");
    std::string suite_name, suite_json;
    suite_cmd->add_option("name", suite_name, "suite id (list them with `defpow rings`)")->required();
    suite_cmd->add_option("--json", suite_json, "write the suite report as JSON");
    add_budget_flags(suite_cmd, opts);

    // --- rings ----------------------------------------------------------------
    auto* rings_cmd = app.add_subcommand("rings", "list the ring catalog and the registered suites");

    // --- report ----------------------------------------------------------------
    auto* report_cmd = app.add_subcommand("report", "merge JSON suite reports into markdown");
    std::vector<std::string> report_files;
    report_cmd->add_option("files", report_files, "JSON reports produced by `suite --json`")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        load_config(opts);
        if (eval_cmd->parsed()) {
            auto S = build_structure(resolve_ring(opts, ring_spec));
            Formula f = parse_formula_text(*S, formula_text, &default_macros(), &default_oracle_names());
            if (!free_vars(f).empty()) {
                std::cerr << "error: the sentence has free variables\n";
                return 3;
            }
            auto r = eval_formula(*S, f, opts.budget, &default_oracles());
            std::cout << "verdict: " << to_cstring(r.verdict.tv) << "\n";
            if (!r.verdict.evidence.empty()) std::cout << "evidence: " << r.verdict.evidence << "\n";
            if (!r.verdict.budget_note.empty()) std::cout << "note: " << r.verdict.budget_note << "\n";
            if (!json_out.empty()) {
                nlohmann::ordered_json j;
                j["structure"] = S->id();
                j["formula"] = formula_text;
                j["verdict"] = to_cstring(r.verdict.tv);
                j["evidence"] = r.verdict.evidence;
                j["note"] = r.verdict.budget_note;
                std::ofstream(json_out) << j.dump(2) << "\n";
            }
            switch (r.verdict.tv) {
                case TV::True: return 0;
                case TV::False: return 1;
                case TV::Unknown: return 2;
            }
        }
        if (suite_cmd->parsed()) {
            SuiteReport rep = run_suite(suite_name, opts.budget, opts.seed);
            std::cout << report_to_text(rep);
            if (!suite_json.empty())
                std::ofstream(suite_json) << report_to_json(rep, opts.timings).dump(2) << "\n";
            return rep.passed() ? 0 : 1;
        }
        if (rings_cmd->parsed()) {
            std::cout << "catalog families:\n";
            for (auto& [spec, what] : catalog_families())
                std::cout << "  " << spec << "  --  " << what << "\n";
            std::cout << "structure specs: <ring>, poly:<ring>, qplane:D=Z|Fp(p),q=<k>\n";
            std::cout << "suites:";
            for (auto& [name, fn] : suite_registry()) std::cout << " " << name;
            std::cout << "\n";
            return 0;
        }
        if (report_cmd->parsed()) {
            std::vector<nlohmann::ordered_json> reports;
            for (const auto& file : report_files) {
                std::ifstream in(file);
                if (!in) throw BadSpecError("cannot open report " + file);
                reports.push_back(nlohmann::ordered_json::parse(in));
            }
            std::cout << reports_to_markdown(reports);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
