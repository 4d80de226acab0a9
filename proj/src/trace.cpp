#include "padicsum/trace.hpp"

namespace padicsum {

std::string trace_to_csv(const ValuationTrace& trace) {
    std::string out = trace.index_name + "," + trace.value_name + ",valuation\n";
    for (const TraceRow& row : trace.rows) {
        out += std::to_string(row.index) + "," +
               rational_to_fraction_string(row.value) + "," +
               valuation_to_text(row.valuation) + "\n";
    }
    return out;
}

nlohmann::ordered_json trace_to_json(const ValuationTrace& trace) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const TraceRow& row : trace.rows) {
        nlohmann::ordered_json r;
        r[trace.index_name] = row.index;
        r[trace.value_name] = rational_to_fraction_string(row.value);
        if (row.valuation.is_infinite())
            r["valuation"] = "inf";
        else
            r["valuation"] = row.valuation.finite_value();
        rows.push_back(std::move(r));
    }
    nlohmann::ordered_json out;
    out["warnings"] = trace.warnings;
    out["rows"] = std::move(rows);
    return out;
}

std::string trace_to_text(const ValuationTrace& trace) {
    std::string out;
    for (const std::string& w : trace.warnings) out += "warning: " + w + "\n";
    out += trace.index_name + "\t" + trace.value_name + "\tvaluation\n";
    for (const TraceRow& row : trace.rows) {
        out += std::to_string(row.index) + "\t" + rational_to_text(row.value) +
               "\t" + valuation_to_text(row.valuation) + "\n";
    }
    return out;
}

} // namespace padicsum
