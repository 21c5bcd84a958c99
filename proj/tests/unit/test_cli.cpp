#include "kodaira/reallocus/reallocus.hpp"
#include "kodaira_cli/cli.hpp"
#include "kodaira_cli/params_file.hpp"
#include "kodaira_cli/report.hpp"
#include "kodaira_cli/selftest.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace kodaira;
using namespace kodaira::cli;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string params_path(const std::string& name) { return std::string(KODAIRA_DOCS_PARAMS) + "/" + name; }
std::string data_path(const std::string& name) { return std::string(KODAIRA_TEST_DATA) + "/" + name; }

// A temporary file removed on scope exit.
struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& text)
        : path(std::filesystem::temp_directory_path() / name) {
        std::ofstream(path) << text;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("parse_params accepts both separators and comments") {
    ParamInput in = parse_params("# header\ncase = A\nm: 3\ndelta1 = 2\neps4 = 1/3  # trailing\nf2 = -1/2\n");
    CHECK(in.lifting.kind == LinearCase::A);
    CHECK(in.params.m == 3);
    CHECK(in.params.delta1 == Rat(2));
    CHECK(in.params.eps4 == Rat(1, 3));
    CHECK(in.lifting.f2 == Rat(-1, 2));
    CHECK(in.lifting.f1 == Rat(0));
}

TEST_CASE("parse_params diagnostics carry line and field") {
    auto line_of = [](const std::string& text) {
        try {
            parse_params(text);
        } catch (const ParseError& e) {
            return std::make_pair(e.line(), e.field());
        }
        return std::make_pair(-1, std::string());
    };
    CHECK(line_of("case = A\nm = 2\ndelta1 = 1\nbogus = 3\n") == std::make_pair(4, std::string("bogus")));
    CHECK(line_of("case = A\nm = 2\nm = 3\ndelta1 = 1\n") == std::make_pair(3, std::string("m")));
    CHECK(line_of("case = A\nm = 2\ndelta1 = 1/0\n") == std::make_pair(3, std::string("delta1")));
    CHECK(line_of("case = C\nm = 2\ndelta1 = 1\n") == std::make_pair(1, std::string("case")));
    CHECK(line_of("case = A\ndelta1 = 1\n").second == "m");
    CHECK(line_of("case = A\nm = 2\ndelta1 = 1\njust text\n").first == 4);
}

TEST_CASE("classify: built-in case and parameter file") {
    auto r = invoke({"classify", "--case", "1B'", "--m", "2"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("label:    1B'") != std::string::npos);

    auto j = invoke({"classify", "--input", params_path("case_b_split.txt"), "--format", "json"});
    REQUIRE(j.code == kOk);
    Json doc = Json::parse(j.out);
    CHECK(doc["label"] == "1B'");
    CHECK(doc["splits"] == true);
    CHECK(dump(doc) == j.out);
}

TEST_CASE("classify exit codes") {
    auto bad = invoke({"classify", "--input", params_path("case_b_inadmissible.txt")});
    CHECK(bad.code == kInadmissible);
    CHECK(bad.err.find("square of the lifting is not in G") != std::string::npos);

    TempFile malformed("kodaira_malformed.txt", "case = A\nm = 2\ndelta1 = x\n");
    auto parse = invoke({"classify", "--input", malformed.path.string()});
    CHECK(parse.code == kParseError);
    CHECK(parse.err.find("line 3") != std::string::npos);

    CHECK(invoke({"classify", "--case", "1B'", "--input", params_path("case_b_split.txt")}).code == kParseError);
    CHECK(invoke({"classify", "--case", "nope"}).code == kParseError);
    CHECK(invoke({"classify", "--case", "2A2ii", "--m", "2"}).code == kParseError);
    CHECK(invoke({"classify"}).code == kParseError);
    CHECK(invoke({"frobnicate"}).code == kParseError);
}

TEST_CASE("table: json round trip and golden files") {
    auto t = invoke({"table", "--m", "2", "--format", "json"});
    REQUIRE(t.code == kOk);
    Json doc = Json::parse(t.out);
    CHECK(dump(doc) == t.out);
    CHECK(doc["m"] == 2);
    CHECK(doc["rows"].size() == enumerate_cases(2).size());

    // A golden file equal to the computed table matches.
    Json rows = Json::object();
    for (const auto& row : doc["rows"]) rows[row["label"].get<std::string>()] = row["summary"];
    TempFile same("kodaira_golden_same.json", dump(Json{{"m", 2}, {"rows", rows}}));
    auto ok = invoke({"table", "--m", "2", "--golden-file", same.path.string()});
    CHECK(ok.code == kOk);
    CHECK(ok.out.find("golden: match") != std::string::npos);

    auto diff = invoke({"table", "--m", "2", "--golden-file", data_path("golden_m2_corrupted.json")});
    CHECK(diff.code == kGoldenDiff);
    CHECK(diff.out.find("golden diff: 1B': computed 2T, golden 3T") != std::string::npos);

    auto wrong_m = invoke({"table", "--m", "3", "--golden-file", data_path("golden_m2_corrupted.json")});
    CHECK(wrong_m.code == kParseError);
}

TEST_CASE("table --golden reports exactly the rows that differ from the published table") {
    for (int m : {1, 2}) {
        auto r = invoke({"table", "--m", std::to_string(m), "--golden", "--format", "json"});
        Json doc = Json::parse(r.out);
        std::size_t differing = 0;
        for (const auto& row : full_table(m))
            if (row.count != *reference_count(row.label, m)) ++differing;
        CHECK(doc["golden_diffs"].size() == differing);
        CHECK(r.code == (differing == 0 ? kOk : kGoldenDiff));
    }
}

TEST_CASE("splitting and moduli-check") {
    auto s = invoke({"splitting", "--m", "2", "--format", "json"});
    CHECK(s.code == kOk);
    CHECK(Json::parse(s.out)["agree"] == true);
    auto m = invoke({"moduli-check", "--m", "2"});
    CHECK(m.code == kOk);
    CHECK(m.out.find("FAIL") == std::string::npos);
}

TEST_CASE("selftest") {
    auto r = invoke({"selftest", "--only", "group,exactalg"});
    CHECK(r.code == kOk);
    auto injected = invoke({"selftest", "--only", "group", "--inject-failure"});
    CHECK(injected.code == kCheckFailed);
    CHECK(injected.out.find("FAIL  group") != std::string::npos);
    CHECK(invoke({"selftest", "--only", "nosuch"}).code == kParseError);
    CHECK_THROWS_AS(run_selftest(SelftestOptions{1, false, {"nosuch"}}), std::invalid_argument);
}
