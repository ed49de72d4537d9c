#ifndef FAITHLAB_REPORT_HPP
#define FAITHLAB_REPORT_HPP

#include <vector>

#include "faithlab/graph.hpp"
#include "faithlab/rational.hpp"

namespace faithlab {

struct StatementDefect {
    SeparationStatement statement;
    Rat defect;
};

// Per-statement classification of one network. markov_violations collects
// separated statements with nonzero defect (never expected for an exact
// Bayesian network); unfaithful_statements collects d-connected statements
// whose defect vanishes exactly.
struct FaithfulnessReport {
    std::vector<StatementDefect> statements;
    std::vector<StatementDefect> markov_violations;
    std::vector<StatementDefect> unfaithful_statements;
    bool is_faithful = true;
};

FaithfulnessReport classify_statements(std::vector<StatementDefect> statements);

// Smallest defect over d-connected statements; throws std::invalid_argument
// when no statement is d-connected.
Rat min_connected_defect(const FaithfulnessReport& report);

bool has_connected_statement(const FaithfulnessReport& report);

}  // namespace faithlab

#endif
