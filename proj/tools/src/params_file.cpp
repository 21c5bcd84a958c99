#include "kodaira_cli/params_file.hpp"

#include "kodaira/error.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace kodaira::cli {

ParseError::ParseError(int line, std::string field, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line),
      field_(std::move(field)) {}

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

const char* const kKeys[] = {"case", "m",  "delta1", "eps1", "delta3", "eps3",
                             "delta4", "eps4", "f1", "f2",   "d1",     "gamma1"};

bool known_key(const std::string& k) {
    for (const char* key : kKeys)
        if (k == key) return true;
    return false;
}

}  // namespace

ParamInput parse_params(std::string_view text) {
    std::map<std::string, std::pair<std::string, int>> values;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        auto sep = line.find_first_of("=:");
        if (sep == std::string::npos) throw ParseError(line_no, "", "expected 'key = value'");
        std::string key = trim(std::string_view(line).substr(0, sep));
        std::string value = trim(std::string_view(line).substr(sep + 1));
        if (!known_key(key)) throw ParseError(line_no, key, "unknown key '" + key + "'");
        if (value.empty()) throw ParseError(line_no, key, "missing value for '" + key + "'");
        if (values.contains(key)) throw ParseError(line_no, key, "duplicate key '" + key + "'");
        values.emplace(key, std::make_pair(value, line_no));
    }
    for (const char* required : {"case", "m", "delta1"})
        if (!values.contains(required)) throw ParseError(0, required, std::string("missing key '") + required + "'");

    auto rat = [&](const char* key) {
        auto it = values.find(key);
        if (it == values.end()) return Rat(0);
        try {
            return Rat::parse(it->second.first);
        } catch (const std::exception&) {
            throw ParseError(it->second.second, key, "'" + it->second.first + "' is not a rational for '" + key + "'");
        }
    };

    ParamInput out;
    const auto& [case_text, case_line] = values.at("case");
    LinearCase kind;
    if (case_text == "A" || case_text == "a") {
        kind = LinearCase::A;
    } else if (case_text == "B" || case_text == "b") {
        kind = LinearCase::B;
    } else {
        throw ParseError(case_line, "case", "case must be A or B, got '" + case_text + "'");
    }
    Rat m = rat("m");
    if (!m.is_integer() || m.sign() <= 0 || m > Rat(1000000))
        throw ParseError(values.at("m").second, "m", "m must be a positive integer");
    out.params.m = static_cast<int>(m.to_i64());
    out.params.delta1 = rat("delta1");
    if (out.params.delta1.is_zero()) throw ParseError(values.at("delta1").second, "delta1", "delta1 must be nonzero");
    out.params.eps1 = rat("eps1");
    out.params.delta3 = rat("delta3");
    out.params.eps3 = rat("eps3");
    out.params.delta4 = rat("delta4");
    out.params.eps4 = rat("eps4");
    out.lifting = Lifting::make(kind, rat("f1"), rat("f2"), rat("d1"), rat("gamma1"));
    return out;
}

ParamInput read_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "", "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_params(buf.str());
}

}  // namespace kodaira::cli
