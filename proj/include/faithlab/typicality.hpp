#ifndef FAITHLAB_TYPICALITY_HPP
#define FAITHLAB_TYPICALITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "faithlab/discrete.hpp"
#include "faithlab/gaussian.hpp"
#include "faithlab/graph.hpp"
#include "faithlab/rational.hpp"

namespace faithlab {

enum class Family { discrete, gaussian };

// Serial is the reference implementation; parallel runs the independent
// draws under OpenMP. Both produce identical reports because every draw
// derives its own sub-seed and the fold is order-independent.
enum class RunMode { serial, parallel };

struct ExperimentConfig {
    Dag graph{{}, {}};
    std::vector<std::string> latent;  // subset of graph vertices
    std::vector<int> cardinalities;   // per vertex; empty means all binary
    Family family = Family::discrete;
    std::uint64_t samples = 1;
    std::uint64_t seed = 0;
    std::vector<Rat> epsilons;  // strictly positive, strictly decreasing
    std::vector<Rat> radii;     // strictly positive, strictly decreasing
    std::uint64_t grid = 10000;
    std::uint64_t resolution = kDefaultResolution;
    std::size_t max_vertices = kDefaultMaxVertices;

    void validate() const;  // throws std::invalid_argument
    std::vector<int> effective_cardinalities() const;
};

// One report shape for every experiment; fields not produced by an
// experiment keep their neutral defaults. Wall-clock timing is not part of
// the report so identical configurations serialize byte-identically.
struct TypicalityReport {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t exact_unfaithful = 0;
    std::uint64_t markov_violations = 0;
    std::vector<std::pair<Rat, std::uint64_t>> epsilon_counts;
    std::vector<std::pair<Rat, Rat>> radius_faithful;  // (radius, fraction)
    std::uint64_t line_zeros = 0;
    std::vector<std::pair<Rat, Rat>> line_profile;  // (t, |defect|)
    Rat min_defect = 0;                 // openness: delta of the base network
    std::uint64_t probes_in_ball = 0;   // openness: probes past the TV filter
    std::uint64_t faithful_in_ball = 0;
    bool vacuous = false;  // openness: no probe passed the filter
};

// Draws `samples` parameter vectors and reports how close their minimum
// d-connected defect comes to zero: exact zeros (never expected) and
// per-epsilon neighbourhood counts.
TypicalityReport measure_zero_experiment(const ExperimentConfig& cfg,
                                         RunMode mode = RunMode::parallel);

// Perturbs an unfaithful base network at every configured radius and
// reports the faithful fraction per radius.
TypicalityReport denseness_experiment(const DiscreteBn& base, const ExperimentConfig& cfg,
                                      RunMode mode = RunMode::parallel);
TypicalityReport denseness_experiment(const GaussianBn& base, const ExperimentConfig& cfg,
                                      RunMode mode = RunMode::parallel);

// Checks that every perturbed probe within total variation delta/4 of a
// faithful network is itself faithful (the defect moves by at most 4 TV).
TypicalityReport openness_witness(const DiscreteBn& base, std::uint64_t n_probes,
                                  const Rat& radius, std::uint64_t seed,
                                  RunMode mode = RunMode::parallel);

// Scans the exact defect of the witness statement along a random parameter
// line through an unfaithful network and counts exact zeros on the grid.
TypicalityReport line_scan_experiment(const GaussianBn& base,
                                      std::uint64_t direction_seed, std::uint64_t grid_n,
                                      RunMode mode = RunMode::parallel);

// Projects the configured graph onto its observed vertices, samples full
// networks and evaluates Markov and faithfulness statements against the
// projection's m-separations.
TypicalityReport latent_experiment(const ExperimentConfig& cfg,
                                   RunMode mode = RunMode::parallel);

// Validity-projected parameter perturbations (reflection at the boundary,
// simplex rows renormalized).
DiscreteBn perturb_network(const DiscreteBn& bn, const Rat& radius, std::uint64_t seed,
                           std::uint64_t resolution = kDefaultResolution);
GaussianBn perturb_network(const GaussianBn& bn, const Rat& radius, std::uint64_t seed,
                           std::uint64_t resolution = kDefaultResolution);

}  // namespace faithlab

#endif
