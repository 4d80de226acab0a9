#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace padicsum {

// One regenerated quantity checked against its published form. Mismatches are
// informational: the generated values are the authoritative ones, and the
// report exists to make the discrepancies auditable.
struct ComparisonEntry {
    int k;
    std::string quantity;
    bool match;
    std::string paper_value;
    std::string generated_value;
};

struct ComparisonReport {
    std::vector<ComparisonEntry> entries;

    bool all_match() const {
        for (const auto& e : entries)
            if (!e.match) return false;
        return true;
    }

    const ComparisonEntry* find(const std::string& quantity) const {
        for (const auto& e : entries)
            if (e.quantity == quantity) return &e;
        return nullptr;
    }
};

inline nlohmann::ordered_json to_json(const ComparisonReport& report) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"k", e.k},
                           {"quantity", e.quantity},
                           {"status", e.match ? "match" : "mismatch"},
                           {"paper_value", e.paper_value},
                           {"generated_value", e.generated_value}});
    }
    return entries;
}

} // namespace padicsum
