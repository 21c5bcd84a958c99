#pragma once

#include "kodaira/classify/classify.hpp"
#include "kodaira/reallocus/reallocus.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace kodaira::cli {

using Json = nlohmann::json;

// Objects keep sorted keys and rationals are "num/den" strings, so
// dump → parse → dump is byte-identical.
Json to_json(const Rat& r);
Json to_json(const NormalWord& w);
Json to_json(const Move& mv);
Json to_json(const Plane& p);
Json to_json(const KodairaParams& p);
Json to_json(const Lifting& l);
Json to_json(const Extension& e);
Json to_json(const RealPartReport& r);
std::string dump(const Json& j);

std::string move_kind_name(MoveKind k);

struct ClassifyReport {
    CaseLabel label;
    Extension input;
    Reduction reduction;
    std::optional<NormalWord> witness;
};
Json to_json(const ClassifyReport& r);
std::string human(const ClassifyReport& r);

struct SplittingReport {
    std::string source;  // label name or input path
    bool splits = false;
    std::optional<NormalWord> witness;
    std::optional<NormalWord> brute_force;
    int bound = 6;
    bool agree() const { return splits == brute_force.has_value(); }
};
Json to_json(const SplittingReport& r);
std::string human(const SplittingReport& r);

}  // namespace kodaira::cli
