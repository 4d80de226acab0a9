// Acceptance suite: runs each verification criterion at full scale, enforces
// its stated runtime ceiling, and prints exactly one PASS/FAIL line per
// criterion. Exit status is nonzero if any requested criterion fails.

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "padicsum/selfcheck.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    int id;
    bool passed;
    std::string line;
};

constexpr double kRuntimeLimitSeconds[] = {
    10.0, // 1: valuation oracle equivalence
    5.0,  // 2: table regeneration
    30.0, // 3: symbolic identity
    30.0, // 4: triple-route equivalence
    60.0, // 5: p-adic convergence
    10.0, // 6: Bernoulli suite
    30.0, // 7: Volkenborn convergence
    10.0, // 8: relation generation
};

Outcome run_one(int id) {
    const auto start = Clock::now();
    padicsum::CriterionResult result = padicsum::run_criterion(id);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    bool passed = result.passed;
    std::string detail;
    if (seconds >= kRuntimeLimitSeconds[id - 1]) {
        passed = false;
        detail = " [runtime limit exceeded]";
    }
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2fs", seconds);
    Outcome outcome{id, passed, ""};
    outcome.line = "criterion " + std::to_string(id) + ": " +
                   (passed ? "PASS" : "FAIL") + " - " + result.name + " (" + timing +
                   ")" + detail;
    if (!passed)
        for (const std::string& note : result.notes) outcome.line += "\n    " + note;
    return outcome;
}

// End-to-end: the one-shot suite runs criteria 1-8 at full scale with
// byte-identical serialized output across runs, inside three minutes.
Outcome run_end_to_end() {
    const auto start = Clock::now();
    const padicsum::SelfcheckReport first = padicsum::run_selfcheck();
    const padicsum::SelfcheckReport second = padicsum::run_selfcheck();
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const std::string text_a = padicsum::selfcheck_to_text(first);
    const std::string text_b = padicsum::selfcheck_to_text(second);
    const std::string json_a = padicsum::selfcheck_to_json(first).dump();
    const std::string json_b = padicsum::selfcheck_to_json(second).dump();
    bool passed = true;
    std::string detail;
    if (first.criteria.size() != 8) {
        passed = false;
        detail += " [suite did not cover criteria 1-8]";
    }
    if (text_a != text_b || json_a != json_b) {
        passed = false;
        detail += " [output not byte-identical across runs]";
    }
    if (seconds >= 180.0) {
        passed = false;
        detail += " [runtime limit exceeded]";
    }
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2fs", seconds);
    Outcome outcome{9, passed, ""};
    outcome.line = std::string("criterion 9: ") + (passed ? "PASS" : "FAIL") +
                   " - selfcheck is deterministic end to end (2 runs, " + timing + ")" +
                   detail;
    return outcome;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> requested;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            requested.push_back(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }
    if (requested.empty())
        for (int id = 1; id <= 9; ++id) requested.push_back(id);

    bool all_passed = true;
    for (int id : requested) {
        if (id < 1 || id > 9) {
            std::cerr << "usage: acceptance [--criterion N] with N in 1..9\n";
            return 2;
        }
        const Outcome outcome = id == 9 ? run_end_to_end() : run_one(id);
        std::cout << outcome.line << "\n";
        all_passed = all_passed && outcome.passed;
    }
    return all_passed ? 0 : 1;
}
