#ifndef FAITHLAB_DISCRETE_HPP
#define FAITHLAB_DISCRETE_HPP

#include <cstdint>
#include <vector>

#include "faithlab/graph.hpp"
#include "faithlab/joint_table.hpp"
#include "faithlab/report.hpp"

namespace faithlab {

// Weight resolution for simplex/coefficient sampling; integer weights are
// drawn up to this bound and normalized, so sampled parameters stay rational.
inline constexpr std::uint64_t kDefaultResolution = std::uint64_t{1} << 20;

// One conditional probability table: rows.size() equals the product of the
// parent cardinalities, rows are laid out row-major over `parents` (the
// last listed parent varying fastest), and every row sums exactly to 1.
struct Cpt {
    std::vector<int> parents;            // vertex indices, ascending
    std::vector<std::vector<Rat>> rows;  // rows[parent config][state]
};

// Discrete Bayesian network with exact rational CPTs. Immutable; the
// constructor verifies row sums, nonnegativity and dimensions, naming the
// offending vertex and row in error messages.
class DiscreteBn {
public:
    DiscreteBn(Dag graph, std::vector<int> cardinalities, std::vector<Cpt> cpts);

    const Dag& graph() const { return graph_; }
    const std::vector<int>& cardinalities() const { return cards_; }
    const Cpt& cpt(int v) const { return cpts_.at(v); }

    // Row index of a full configuration within v's CPT.
    std::size_t row_index(int v, const std::vector<int>& full_config) const;

    bool operator==(const DiscreteBn& other) const;

private:
    Dag graph_;
    std::vector<int> cards_;
    std::vector<Cpt> cpts_;
};

// Product of CPT entries along a topological order, over the full state
// space. Exact.
JointTable joint(const DiscreteBn& bn);

// Every CPT row drawn as `cardinality` integer weights uniform in
// {1, ..., resolution}, normalized. Strictly positive entries;
// deterministic given the seed.
DiscreteBn sample_parameters(const Dag& g, const std::vector<int>& cardinalities,
                             std::uint64_t seed,
                             std::uint64_t resolution = kDefaultResolution);

// Evaluates the joint's ci_defect on every enumerated singleton statement.
FaithfulnessReport check_faithful(const DiscreteBn& bn,
                                  std::size_t max_vertices = kDefaultMaxVertices);

// Example-style constructor: A <- B -> C with P(B) a point mass at `atom`.
// a_given_b / c_given_b have one row per state of B.
DiscreteBn deterministic_variable_bn(const std::vector<int>& cardinalities,
                                     const std::vector<std::vector<Rat>>& a_given_b,
                                     const std::vector<std::vector<Rat>>& c_given_b,
                                     int atom);

// Example-style constructor: D -> {A, B, C} with P(B | D) the identity
// kernel; requires card(B) == card(D). Vertex order is (A, B, C, D).
DiscreteBn deterministic_relation_bn(const std::vector<int>& cardinalities,
                                     const std::vector<std::vector<Rat>>& a_given_d,
                                     const std::vector<std::vector<Rat>>& c_given_d,
                                     const std::vector<Rat>& d_prior);

// A binary-CPT network over g that is Markov by construction and carries
// the dependence a ~ b given c, found by seeded re-sampling. With a == b
// the independent product network is returned instead. `retries_out`
// receives the number of rejected samples when non-null.
DiscreteBn dependent_binary_bn(const Dag& g, int a, int b, const std::vector<int>& c,
                               std::uint64_t seed, int retry_budget = 1000,
                               int* retries_out = nullptr);

}  // namespace faithlab

#endif
