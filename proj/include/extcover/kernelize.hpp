#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extcover/instance.hpp"

namespace extcover {

enum class Rule { R0, R1, R2, R3, R4, R5, R5p, R6 };

const char* rule_name(Rule r);

struct TraceStep {
    Rule rule;
    std::vector<int> removed_v;   // original ids, ascending
    std::vector<Edge> removed_e;  // original ids, u < v (R3 only)
    std::vector<int> removed_u;   // original ids, ascending
    std::optional<bool> verdict;  // R0 -> YES, R1 -> NO; terminal
};

// Ordered log of fired rules; replaying it on the original instance
// reproduces the reduced instance exactly.
struct ReductionTrace {
    std::vector<TraceStep> steps;
};

// One step per line: "rule=<id> removed_v=<ids> removed_e=<pairs>
// removed_u=<ids> [verdict=YES|NO]", 1-based ids.
std::string serialize_trace(const ReductionTrace& trace);

struct RuleEngineResult {
    ExtInstance reduced;           // empty instance when a verdict fired
    std::vector<int> to_original;  // reduced id -> original id
    ReductionTrace trace;
    std::optional<bool> verdict;
    // Vertices committed to stay outside the cover, each donating private
    // edges to its neighborhood (R4/R5/R5' firings, in order, original ids).
    std::vector<int> donors;
};

// Applies Rules 0-5, 5' and 6 exhaustively in that order; lowest vertex id
// first within a rule, Rule 6 as one batch per stabilization round.
RuleEngineResult apply_rules(const ExtInstance& inst);

// One firing of the first applicable rule, or nullopt at fixpoint.
struct SingleStep {
    ExtInstance after;
    std::vector<int> to_original;
    TraceStep step;
};
std::optional<SingleStep> apply_first_rule_once(const ExtInstance& inst);
std::optional<Rule> first_applicable_rule(const ExtInstance& inst);

// Rule 6 alone: the decision-equivalent restriction to G[N[U]].
struct Restriction {
    ExtInstance instance;
    std::vector<int> to_original;
};
Restriction restrict_to_closed_neighborhood(const ExtInstance& inst);

struct KernelReport {
    int reduced_n = 0;
    long long bound = 0;  // (max_degree + 1) * |U| of the original instance
};
KernelReport kernel_size_report(const ExtInstance& inst);

// Mechanical replay of a trace; used to check trace fidelity.
struct ReplayResult {
    ExtInstance instance;
    std::vector<int> to_original;
};
ReplayResult replay_trace(const ExtInstance& inst, const ReductionTrace& trace);

}  // namespace extcover
