#include "kodaira_cli/cli.hpp"

#include "kodaira/error.hpp"
#include "kodaira/moduli/moduli.hpp"
#include "kodaira/sampling.hpp"
#include "kodaira_cli/params_file.hpp"
#include "kodaira_cli/report.hpp"
#include "kodaira_cli/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace kodaira::cli {

namespace {

struct RunConfig {
    std::string subcommand;
    int m = 2;
    std::string input;
    std::string case_name;
    std::string format = "human";
    int verbosity = 0;
    bool golden = false;
    std::string golden_file;
    std::vector<std::string> only;
    bool inject_failure = false;

    bool json() const { return format == "json"; }
};

// Inputs resolve to a real structure either from a parameter file or from
// the built-in representative of a label.
RealStructure resolve_input(const RunConfig& cfg, std::string& source) {
    if (!cfg.input.empty()) {
        ParamInput in = read_params_file(cfg.input);
        source = cfg.input;
        return RealStructure::make(in.params, in.lifting);
    }
    auto label = parse_label(cfg.case_name);
    if (!label) throw ParseError(0, "case", "unknown case label '" + cfg.case_name + "'");
    if (!label_occurs(*label, cfg.m))
        throw ParseError(0, "case", "case " + cfg.case_name + " does not occur for m = " + std::to_string(cfg.m));
    source = label_name(*label);
    return representative(*label, cfg.m);
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    std::string source;
    RealStructure rs = resolve_input(cfg, source);
    Extension e = extension_of(rs);
    Reduction r = reduce(e);
    ClassifyReport report{r.label, e, r, splitting_witness(e)};
    out << (cfg.json() ? dump(to_json(report)) : human(report));
    return kOk;
}

int cmd_splitting(const RunConfig& cfg, std::ostream& out) {
    std::vector<std::pair<std::string, RealStructure>> inputs;
    if (!cfg.input.empty() || !cfg.case_name.empty()) {
        std::string source;
        RealStructure rs = resolve_input(cfg, source);
        inputs.emplace_back(source, rs);
    } else {
        for (const auto& rep : enumerate_cases(cfg.m)) inputs.emplace_back(label_name(rep.label), rep.rs);
    }
    Json rows = Json::array();
    bool all_agree = true;
    for (const auto& [source, rs] : inputs) {
        Extension e = extension_of(rs);
        SplittingReport r;
        r.source = source;
        r.witness = splitting_witness(e);
        r.splits = r.witness.has_value();
        r.brute_force = brute_force_splitting_witness(e, r.bound);
        all_agree = all_agree && r.agree();
        if (cfg.json()) {
            rows.push_back(to_json(r));
        } else {
            out << human(r);
        }
    }
    if (cfg.json()) out << dump(Json{{"m", cfg.m}, {"rows", rows}, {"agree", all_agree}});
    return all_agree ? kOk : kCheckFailed;
}

// Golden table as label name → summary string.
std::map<std::string, std::string> load_golden(const RunConfig& cfg) {
    std::map<std::string, std::string> golden;
    if (cfg.golden_file.empty()) {
        for (CaseLabel c : all_labels()) {
            if (!label_occurs(c, cfg.m)) continue;
            if (auto n = reference_count(c, cfg.m)) golden[label_name(c)] = count_summary(*n);
        }
        return golden;
    }
    std::ifstream in(cfg.golden_file);
    if (!in) throw ParseError(0, "golden-file", "cannot open '" + cfg.golden_file + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        throw ParseError(0, "golden-file", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_object())
        throw ParseError(0, "golden-file", "expected an object with a \"rows\" object");
    if (j.contains("m") && j["m"] != cfg.m)
        throw ParseError(0, "golden-file", "golden file is for a different m");
    for (const auto& [label, value] : j["rows"].items()) {
        if (!value.is_string()) throw ParseError(0, "golden-file", "row '" + label + "' is not a string");
        golden[label] = value.get<std::string>();
    }
    return golden;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    auto rows = full_table(cfg.m);
    std::vector<std::string> diffs;
    std::map<std::string, std::string> golden;
    const bool compare = cfg.golden || !cfg.golden_file.empty();
    if (compare) {
        golden = load_golden(cfg);
        std::map<std::string, std::string> computed;
        for (const auto& r : rows) computed[label_name(r.label)] = r.summary();
        for (const auto& [label, expect] : golden) {
            auto it = computed.find(label);
            if (it == computed.end()) {
                diffs.push_back(label + ": missing from computed table, golden " + expect);
            } else if (it->second != expect) {
                diffs.push_back(label + ": computed " + it->second + ", golden " + expect);
            }
        }
        for (const auto& [label, got] : computed)
            if (!golden.contains(label)) diffs.push_back(label + ": computed " + got + ", absent from golden");
    }
    if (cfg.json()) {
        Json jr = Json::array();
        for (const auto& r : rows) {
            Json row = to_json(r);
            if (cfg.verbosity == 0) row.erase("components");
            jr.push_back(row);
        }
        Json doc{{"m", cfg.m}, {"rows", jr}};
        if (compare) doc["golden_diffs"] = diffs;
        out << dump(doc);
    } else {
        out << "m = " << cfg.m << "\n";
        for (const auto& r : rows) {
            out << "  " << label_name(r.label);
            out << std::string(10 - std::min<std::size_t>(10, label_name(r.label).size()), ' ') << r.summary();
            if (cfg.verbosity > 0) {
                for (const auto& comp : r.components) out << "\n      g = " << comp.g.str() << ", plane " << comp.plane.str();
            }
            out << "\n";
        }
        if (compare) {
            if (diffs.empty()) {
                out << "golden: match\n";
            } else {
                for (const auto& d : diffs) out << "golden diff: " << d << "\n";
            }
        }
    }
    return diffs.empty() ? kOk : kGoldenDiff;
}

int cmd_moduli_check(const RunConfig& cfg, std::ostream& out) {
    Sampler s(seed_from_env());
    Json checks = Json::array();
    bool all = true;
    auto record = [&](const std::string& name, bool ok, const std::string& detail) {
        all = all && ok;
        checks.push_back(Json{{"name", name}, {"ok", ok}, {"detail", detail}});
        if (!cfg.json()) out << (ok ? "ok    " : "FAIL  ") << name << "  " << detail << "\n";
    };
    for (auto kind : {LinearCase::A, LinearCase::B}) {
        for (bool zero : {true, false}) {
            std::string name = "exchange " + to_string(kind) + (zero ? " f2=0" : " f2!=0");
            ActionMatrix a = exchange_automorphism(kind, zero);
            std::ostringstream detail;
            detail << "a=" << a.a << " b=" << a.b << " c=" << a.c << " d=" << a.d << " e=" << a.e << " k=" << a.k;
            record(name, exchange_check(kind, zero, cfg.m), detail.str());
        }
    }
    constexpr int kPoints = 200;
    int preserved = 0;
    for (int i = 0; i < kPoints; ++i) {
        PeriodPoint p = s.period_point();
        PeriodPoint q = borcea_act(s.action(3), cfg.m, p);
        if (q.quadric().is_zero() && q.positivity() == p.positivity() && q.is_valid()) ++preserved;
    }
    record("action preserves D", preserved == kPoints, std::to_string(preserved) + "/" + std::to_string(kPoints));
    for (auto kind : {LinearCase::A, LinearCase::B}) {
        for (bool nz : {false, true}) {
            int agree = 0;
            auto sample = s.locus_sample(kind, nz, kPoints);
            for (const auto& p : sample) {
                auto [x, y] = to_halfplanes(p);
                if (reality_conditions(s.lifting(kind, nz), p) == stated_locus(kind, nz, x, y)) ++agree;
            }
            record("reality locus " + to_string(kind) + (nz ? " f2!=0" : " f2=0"), agree == kPoints,
                   std::to_string(agree) + "/" + std::to_string(kPoints));
        }
    }
    if (cfg.json()) out << dump(Json{{"m", cfg.m}, {"checks", checks}, {"ok", all}});
    return all ? kOk : kCheckFailed;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
    SelftestOptions opts;
    opts.seed = seed_from_env();
    opts.only = cfg.only;
    opts.inject_failure = cfg.inject_failure;
    auto results = run_selftest(opts);
    int passed = 0, failed = 0;
    Json suites = Json::array();
    for (const auto& r : results) {
        passed += r.passed;
        failed += r.failed;
        if (cfg.json()) {
            suites.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"failures", r.failures}});
            continue;
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
        out << (r.failed == 0 ? "PASS  " : "FAIL  ") << r.name << "  " << r.passed << " passed, " << r.failed
            << " failed  (" << buf << ")\n";
        for (const auto& f : r.failures) out << "        " << f << "\n";
    }
    if (cfg.json()) {
        out << dump(Json{{"seed", std::to_string(opts.seed)}, {"suites", suites}, {"passed", passed}, {"failed", failed}});
    } else {
        out << "total: " << passed << " passed, " << failed << " failed (seed " << opts.seed << ")\n";
    }
    return failed == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Real structures on primary Kodaira surfaces", "kodaira"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "kodaira 0.1.0");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--m", cfg.m, "Torsion coefficient m >= 1")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "json"}));
        sub->add_flag("-v,--verbose", cfg.verbosity, "More detail");
    };
    auto add_input = [&](CLI::App* sub) {
        auto* in = sub->add_option("--input", cfg.input, "Parameter file (key = value lines)");
        sub->add_option("--case", cfg.case_name, "Built-in representative of a case label")->excludes(in);
    };

    auto* classify = app.add_subcommand("classify", "Reduce a real structure to its case label");
    add_common(classify);
    add_input(classify);
    auto* table = app.add_subcommand("table", "Real-part table for one m");
    add_common(table);
    table->add_flag("--golden", cfg.golden, "Compare against the embedded published table");
    table->add_option("--golden-file", cfg.golden_file, "Compare against a JSON golden file");
    auto* splitting = app.add_subcommand("splitting", "Splitting decisions with a brute-force cross-check");
    add_common(splitting);
    add_input(splitting);
    auto* moduli = app.add_subcommand("moduli-check", "Period-domain checks");
    add_common(moduli);
    auto* selftest = app.add_subcommand("selftest", "Run the property suites");
    add_common(selftest);
    selftest->add_option("--only", cfg.only, "Run only these suites")->delimiter(',');
    selftest->add_flag("--inject-failure", cfg.inject_failure)->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
    for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

    try {
        if (cfg.subcommand == "classify") {
            if (cfg.input.empty() && cfg.case_name.empty()) throw ParseError(0, "", "classify needs --input or --case");
            return cmd_classify(cfg, out);
        }
        if (cfg.subcommand == "table") return cmd_table(cfg, out);
        if (cfg.subcommand == "splitting") return cmd_splitting(cfg, out);
        if (cfg.subcommand == "moduli-check") return cmd_moduli_check(cfg, out);
        return cmd_selftest(cfg, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotAdmissible || e.kind() == ErrorKind::InadmissibleExtension) {
            err << "error: inadmissible: " << e.what() << "\n";
            return kInadmissible;
        }
        if (e.kind() == ErrorKind::InvalidArgument) {
            err << "error: " << e.what() << "\n";
            return kParseError;
        }
        err << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
}

}  // namespace kodaira::cli
