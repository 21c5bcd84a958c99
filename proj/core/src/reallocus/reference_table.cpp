#include "kodaira/reallocus/reallocus.hpp"

#include <string>

namespace kodaira {

const std::vector<TableEntry>& reference_table() {
    static const std::vector<TableEntry> table = {
        {CaseLabel::B1p, 0, 2},      {CaseLabel::B1p, 1, 1},      {CaseLabel::B2, -1, 1},
        {CaseLabel::A1aip, 0, 4},    {CaseLabel::A1aip, 1, 3},    {CaseLabel::A1aiip, -1, 2},
        {CaseLabel::A1aiipp, 0, 2},  {CaseLabel::A1aiipp, 1, 1},  {CaseLabel::A1bip, 0, 3},
        {CaseLabel::A1bip, 1, 4},    {CaseLabel::A1biip, -1, 1},  {CaseLabel::A1biipp, 0, 1},
        {CaseLabel::A1biipp, 1, 2},  {CaseLabel::A1_2, -1, 2},    {CaseLabel::B1pp, -1, 0},
        {CaseLabel::A1aipp, -1, 0},  {CaseLabel::A1bipp, -1, 0},  {CaseLabel::A2aip, 0, 0},
        {CaseLabel::A2aipp, 0, 0},   {CaseLabel::A2aiip, 0, 0},   {CaseLabel::A2aiipp, 0, 0},
        {CaseLabel::A2_2i, 0, 0},    {CaseLabel::A2_2ii, 1, 0},
    };
    return table;
}

std::optional<int> reference_count(CaseLabel c, int m) {
    for (const auto& e : reference_table()) {
        if (e.label == c && (e.parity < 0 || e.parity == m % 2)) return e.count;
    }
    return std::nullopt;
}

std::string count_summary(int count) {
    if (count == 0) return "∅";
    if (count == 1) return "T";
    return std::to_string(count) + "T";
}

std::optional<int> parse_count_summary(std::string_view text) {
    if (text == "∅" || text == "0" || text == "empty") return 0;
    if (text == "T") return 1;
    if (text.size() >= 2 && text.back() == 'T') {
        int v = 0;
        for (char ch : text.substr(0, text.size() - 1)) {
            if (ch < '0' || ch > '9') return std::nullopt;
            v = v * 10 + (ch - '0');
        }
        return v;
    }
    return std::nullopt;
}

}  // namespace kodaira
