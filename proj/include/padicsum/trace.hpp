#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "padicsum/padic.hpp"
#include "padicsum/rational.hpp"

namespace padicsum {

// One (index, exact value, valuation) row of a convergence trace.
struct TraceRow {
    long index;
    Rational value;
    Valuation valuation;
};

struct ValuationTrace {
    std::string index_name; // "N" for partial sums, "m" for Volkenborn depth
    std::string value_name; // "partial_sum" or "difference"
    std::vector<TraceRow> rows;
    std::vector<std::string> warnings;

    bool has_warnings() const { return !warnings.empty(); }
};

// Header row plus one line per entry; values always "a/b", infinite
// valuations rendered as "inf".
std::string trace_to_csv(const ValuationTrace& trace);

nlohmann::ordered_json trace_to_json(const ValuationTrace& trace);

std::string trace_to_text(const ValuationTrace& trace);

} // namespace padicsum
