#include "faithlab/report.hpp"

#include <stdexcept>

namespace faithlab {

FaithfulnessReport classify_statements(std::vector<StatementDefect> statements) {
    FaithfulnessReport report;
    report.statements = std::move(statements);
    for (const auto& sd : report.statements) {
        if (sd.statement.separated && sd.defect != 0) {
            report.markov_violations.push_back(sd);
        }
        if (!sd.statement.separated && sd.defect == 0) {
            report.unfaithful_statements.push_back(sd);
        }
    }
    report.is_faithful =
        report.markov_violations.empty() && report.unfaithful_statements.empty();
    return report;
}

bool has_connected_statement(const FaithfulnessReport& report) {
    for (const auto& sd : report.statements) {
        if (!sd.statement.separated) return true;
    }
    return false;
}

Rat min_connected_defect(const FaithfulnessReport& report) {
    bool found = false;
    Rat best = 0;
    for (const auto& sd : report.statements) {
        if (sd.statement.separated) continue;
        if (!found || sd.defect < best) {
            best = sd.defect;
            found = true;
        }
    }
    if (!found) {
        throw std::invalid_argument("report has no d-connected statements");
    }
    return best;
}

}  // namespace faithlab
