#pragma once

#include <string>
#include <vector>

#include "artin/graph.hpp"
#include "artin/oracle.hpp"

namespace artin {
namespace verify {

enum class Status { Pass, Fail, Inconclusive };

struct CheckResult {
    std::string name;
    Status status = Status::Inconclusive;
    std::string details;
    bool budget_exhausted = false; // an exactness-required check ran out of budget
};

struct Config {
    int depth = 1;
    int residue_radius = 3;
    long long farey_qmax = 8;
    oracle::Budget budget;
    std::vector<std::string> checks; // empty = all

    static const std::vector<std::string>& all_checks();
};

std::vector<CheckResult> run_checks(const DefiningGraph& g, const Config& cfg);

// Line-oriented "CHECK <name> PASS|FAIL|INCONCLUSIVE <details>" report.
std::string format_report(const std::vector<CheckResult>& results);

bool any_failed(const std::vector<CheckResult>& results);
bool any_budget_exhausted(const std::vector<CheckResult>& results);

} // namespace verify
} // namespace artin
