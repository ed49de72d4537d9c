#include "faithlab/typicality.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "faithlab/rng.hpp"

namespace faithlab {

namespace {

// Runs fn(i) for i in [0, n). The parallel path distributes draws over
// OpenMP threads; results must be written to per-index slots so the fold
// stays order-independent.
template <typename F>
void for_each_draw(std::uint64_t n, RunMode mode, F&& fn) {
    if (mode == RunMode::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            fn(static_cast<std::uint64_t>(i));
        }
    } else {
        for (std::uint64_t i = 0; i < n; ++i) fn(i);
    }
}

void check_descending_positive(const std::vector<Rat>& values, const char* what) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] <= 0) {
            throw std::invalid_argument(std::string(what) + " must be strictly positive");
        }
        if (k > 0 && values[k] >= values[k - 1]) {
            throw std::invalid_argument(std::string(what) + " must be strictly decreasing");
        }
    }
}

std::vector<std::string> statement_c_labels(const Dag& g, const SeparationStatement& st) {
    std::vector<std::string> c;
    for (int v : st.c) c.push_back(g.label(v));
    return c;
}

// Offset uniform on the rational grid {k/resolution : |k| <= resolution},
// scaled by radius.
Rat uniform_offset(Rng& rng, const Rat& radius, std::uint64_t resolution) {
    const long k = static_cast<long>(rng.below(2 * resolution + 1)) -
                   static_cast<long>(resolution);
    Rat offset(mpz_class(k), mpz_class(static_cast<unsigned long>(resolution)));
    offset.canonicalize();
    return Rat(offset * radius);
}

}  // namespace

void ExperimentConfig::validate() const {
    if (samples < 1) throw std::invalid_argument("samples must be at least 1");
    check_descending_positive(epsilons, "epsilons");
    check_descending_positive(radii, "radii");
    if (!cardinalities.empty() && cardinalities.size() != graph.size()) {
        throw std::invalid_argument("cardinalities must match the vertex count");
    }
    for (const auto& label : latent) {
        graph.index_of(label);  // throws for unknown labels
    }
}

std::vector<int> ExperimentConfig::effective_cardinalities() const {
    if (!cardinalities.empty()) return cardinalities;
    return std::vector<int>(graph.size(), 2);
}

namespace {

struct DrawOutcome {
    bool exact_zero = false;
    std::uint64_t epsilon_mask = 0;
    std::uint64_t markov_violations = 0;
};

template <typename DefectFn>
DrawOutcome summarize_draw(const std::vector<SeparationStatement>& statements,
                           const std::vector<Rat>& epsilons, DefectFn&& defect_of) {
    DrawOutcome out;
    bool any_connected = false;
    Rat min_defect = 0;
    for (const auto& st : statements) {
        const Rat defect = defect_of(st);
        if (st.separated) {
            if (defect != 0) ++out.markov_violations;
        } else {
            if (!any_connected || defect < min_defect) {
                min_defect = defect;
                any_connected = true;
            }
        }
    }
    if (any_connected) {
        out.exact_zero = (min_defect == 0);
        for (std::size_t e = 0; e < epsilons.size(); ++e) {
            if (min_defect < epsilons[e]) out.epsilon_mask |= std::uint64_t{1} << e;
        }
    }
    return out;
}

TypicalityReport fold_outcomes(const ExperimentConfig& cfg,
                               const std::vector<DrawOutcome>& outcomes) {
    TypicalityReport report;
    report.samples = cfg.samples;
    report.seed = cfg.seed;
    std::vector<std::uint64_t> counts(cfg.epsilons.size(), 0);
    for (const auto& o : outcomes) {
        if (o.exact_zero) ++report.exact_unfaithful;
        report.markov_violations += o.markov_violations;
        for (std::size_t e = 0; e < counts.size(); ++e) {
            if (o.epsilon_mask & (std::uint64_t{1} << e)) ++counts[e];
        }
    }
    for (std::size_t e = 0; e < counts.size(); ++e) {
        report.epsilon_counts.emplace_back(cfg.epsilons[e], counts[e]);
    }
    return report;
}

}  // namespace

TypicalityReport measure_zero_experiment(const ExperimentConfig& cfg, RunMode mode) {
    cfg.validate();
    if (cfg.epsilons.size() > 64) {
        throw std::invalid_argument("at most 64 epsilons are supported");
    }
    const auto statements = enumerate_statements(cfg.graph, cfg.max_vertices);
    const auto cards = cfg.effective_cardinalities();

    std::vector<DrawOutcome> outcomes(cfg.samples);
    for_each_draw(cfg.samples, mode, [&](std::uint64_t i) {
        const std::uint64_t sub = derive_seed(cfg.seed, i);
        if (cfg.family == Family::discrete) {
            const DiscreteBn bn = sample_parameters(cfg.graph, cards, sub, cfg.resolution);
            const JointTable t = joint(bn);
            outcomes[i] = summarize_draw(statements, cfg.epsilons,
                                         [&](const SeparationStatement& st) {
                                             return ci_defect(
                                                 t, {cfg.graph.label(st.a)},
                                                 {cfg.graph.label(st.b)},
                                                 statement_c_labels(cfg.graph, st));
                                         });
        } else {
            const GaussianBn bn =
                sample_parameters_gaussian(cfg.graph, sub, cfg.resolution);
            const CovarianceMatrix sigma = covariance(bn);
            outcomes[i] = summarize_draw(statements, cfg.epsilons,
                                         [&](const SeparationStatement& st) {
                                             return ci_defect_gaussian(
                                                 sigma, {cfg.graph.label(st.a)},
                                                 {cfg.graph.label(st.b)},
                                                 statement_c_labels(cfg.graph, st));
                                         });
        }
    });
    return fold_outcomes(cfg, outcomes);
}

DiscreteBn perturb_network(const DiscreteBn& bn, const Rat& radius, std::uint64_t seed,
                           std::uint64_t resolution) {
    Rng rng(seed);
    std::vector<Cpt> cpts(bn.graph().size());
    for (std::size_t v = 0; v < bn.graph().size(); ++v) {
        const Cpt& orig = bn.cpt(static_cast<int>(v));
        cpts[v].parents = orig.parents;
        for (const auto& row : orig.rows) {
            std::vector<Rat> perturbed(row.size());
            Rat sum = 0;
            for (std::size_t s = 0; s < row.size(); ++s) {
                Rat entry = row[s] + uniform_offset(rng, radius, resolution);
                if (entry < 0) entry = -entry;  // reflect at the boundary
                perturbed[s] = entry;
                sum += entry;
            }
            if (sum == 0) {
                perturbed = row;  // keep the original row; cannot normalize
            } else {
                for (Rat& entry : perturbed) entry /= sum;
            }
            cpts[v].rows.push_back(std::move(perturbed));
        }
    }
    return DiscreteBn(bn.graph(), bn.cardinalities(), std::move(cpts));
}

GaussianBn perturb_network(const GaussianBn& bn, const Rat& radius, std::uint64_t seed,
                           std::uint64_t resolution) {
    Rng rng(seed);
    std::vector<std::vector<Rat>> coeffs(bn.graph().size());
    std::vector<Rat> variances(bn.graph().size());
    for (std::size_t v = 0; v < bn.graph().size(); ++v) {
        for (const Rat& beta : bn.coefficients(static_cast<int>(v))) {
            coeffs[v].push_back(Rat(beta + uniform_offset(rng, radius, resolution)));
        }
        Rat var = bn.variance(static_cast<int>(v)) +
                  uniform_offset(rng, radius, resolution);
        if (var < 0) var = -var;  // reflect to keep the variance positive
        if (var == 0) var = radius;
        variances[v] = var;
    }
    return GaussianBn(bn.graph(), std::move(coeffs), std::move(variances));
}

namespace {

template <typename Network, typename FaithfulFn, typename PerturbFn>
TypicalityReport denseness_impl(const Network& base, const ExperimentConfig& cfg,
                                RunMode mode, FaithfulFn&& faithful,
                                PerturbFn&& perturb) {
    cfg.validate();
    if (cfg.radii.empty()) {
        throw std::invalid_argument("denseness experiment requires radii");
    }
    if (faithful(base)) {
        throw std::invalid_argument("denseness base network must be unfaithful");
    }
    TypicalityReport report;
    report.samples = cfg.samples;
    report.seed = cfg.seed;
    for (std::size_t r = 0; r < cfg.radii.size(); ++r) {
        std::vector<char> ok(cfg.samples, 0);
        for_each_draw(cfg.samples, mode, [&](std::uint64_t i) {
            const std::uint64_t sub =
                derive_seed(cfg.seed, static_cast<std::uint64_t>(r) * cfg.samples + i);
            ok[i] = faithful(perturb(base, cfg.radii[r], sub)) ? 1 : 0;
        });
        std::uint64_t count = 0;
        for (char c : ok) count += static_cast<std::uint64_t>(c);
        Rat fraction(mpz_class(static_cast<unsigned long>(count)),
                     mpz_class(static_cast<unsigned long>(cfg.samples)));
        fraction.canonicalize();
        report.radius_faithful.emplace_back(cfg.radii[r], fraction);
    }
    return report;
}

}  // namespace

TypicalityReport denseness_experiment(const DiscreteBn& base, const ExperimentConfig& cfg,
                                      RunMode mode) {
    return denseness_impl(
        base, cfg, mode,
        [&](const DiscreteBn& bn) { return check_faithful(bn, cfg.max_vertices).is_faithful; },
        [&](const DiscreteBn& bn, const Rat& radius, std::uint64_t seed) {
            return perturb_network(bn, radius, seed, cfg.resolution);
        });
}

TypicalityReport denseness_experiment(const GaussianBn& base, const ExperimentConfig& cfg,
                                      RunMode mode) {
    return denseness_impl(
        base, cfg, mode,
        [&](const GaussianBn& bn) {
            return check_faithful_gaussian(bn, cfg.max_vertices).is_faithful;
        },
        [&](const GaussianBn& bn, const Rat& radius, std::uint64_t seed) {
            return perturb_network(bn, radius, seed, cfg.resolution);
        });
}

TypicalityReport openness_witness(const DiscreteBn& base, std::uint64_t n_probes,
                                  const Rat& radius, std::uint64_t seed, RunMode mode) {
    if (radius <= 0) throw std::invalid_argument("radius must be positive");
    const FaithfulnessReport base_report = check_faithful(base);
    if (!base_report.is_faithful) {
        throw std::invalid_argument("openness witness requires a faithful base network");
    }
    if (!has_connected_statement(base_report)) {
        throw std::invalid_argument(
            "openness witness requires at least one d-connected statement");
    }
    const Rat delta = min_connected_defect(base_report);
    const Rat threshold = Rat(delta / 4);
    const JointTable base_joint = joint(base);

    struct ProbeOutcome {
        bool in_ball = false;
        bool faithful = false;
    };
    std::vector<ProbeOutcome> outcomes(n_probes);
    for_each_draw(n_probes, mode, [&](std::uint64_t i) {
        const DiscreteBn probe = perturb_network(base, radius, derive_seed(seed, i));
        if (tv_distance(joint(probe), base_joint) < threshold) {
            outcomes[i].in_ball = true;
            outcomes[i].faithful = check_faithful(probe).is_faithful;
        }
    });

    TypicalityReport report;
    report.samples = n_probes;
    report.seed = seed;
    report.min_defect = delta;
    for (const auto& o : outcomes) {
        if (o.in_ball) {
            ++report.probes_in_ball;
            if (o.faithful) ++report.faithful_in_ball;
        }
    }
    report.vacuous = (report.probes_in_ball == 0);
    return report;
}

TypicalityReport line_scan_experiment(const GaussianBn& base,
                                      std::uint64_t direction_seed, std::uint64_t grid_n,
                                      RunMode mode) {
    if (grid_n < 1) throw std::invalid_argument("grid must have at least one step");
    const FaithfulnessReport base_report = check_faithful_gaussian(base);
    if (base_report.unfaithful_statements.empty()) {
        throw std::invalid_argument("line scan requires an unfaithful base network");
    }
    const SeparationStatement witness = base_report.unfaithful_statements.front().statement;
    const Dag& g = base.graph();
    const std::vector<std::string> a{g.label(witness.a)};
    const std::vector<std::string> b{g.label(witness.b)};
    const std::vector<std::string> c = statement_c_labels(g, witness);

    // Direction over the free parameters: additive offsets for
    // coefficients, relative factors for variances so that sigma^2(t) =
    // sigma^2 (1 + t k / 2) stays positive across t in [-1, 1].
    const std::uint64_t resolution = kDefaultResolution;
    std::vector<std::vector<Rat>> beta_dir(g.size());
    std::vector<Rat> var_dir(g.size());
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng(derive_seed(direction_seed + attempt, 0));
        bool any_nonzero = false;
        for (std::size_t v = 0; v < g.size(); ++v) {
            beta_dir[v].clear();
            for (std::size_t k = 0; k < g.parents(static_cast<int>(v)).size(); ++k) {
                const Rat d = uniform_offset(rng, Rat(1), resolution);
                if (d != 0) any_nonzero = true;
                beta_dir[v].push_back(d);
            }
            var_dir[v] = uniform_offset(rng, Rat(1), resolution);
            if (var_dir[v] != 0) any_nonzero = true;
        }
        if (any_nonzero) break;
    }

    auto network_at = [&](const Rat& t) {
        std::vector<std::vector<Rat>> coeffs(g.size());
        std::vector<Rat> variances(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) {
            const auto& beta = base.coefficients(static_cast<int>(v));
            for (std::size_t k = 0; k < beta.size(); ++k) {
                coeffs[v].push_back(Rat(beta[k] + t * beta_dir[v][k]));
            }
            variances[v] = Rat(base.variance(static_cast<int>(v)) *
                               (1 + t * var_dir[v] / 2));
        }
        return GaussianBn(g, std::move(coeffs), std::move(variances));
    };

    std::vector<Rat> defects(grid_n + 1);
    std::vector<Rat> points(grid_n + 1);
    for_each_draw(grid_n + 1, mode, [&](std::uint64_t i) {
        Rat t(mpz_class(2 * static_cast<long>(i) - static_cast<long>(grid_n)),
              mpz_class(static_cast<unsigned long>(grid_n)));
        t.canonicalize();
        points[i] = t;
        defects[i] = ci_defect_gaussian(network_at(t), a, b, c);
    });

    TypicalityReport report;
    report.samples = grid_n + 1;
    report.seed = direction_seed;
    for (std::size_t i = 0; i < defects.size(); ++i) {
        if (defects[i] == 0) ++report.line_zeros;
        report.line_profile.emplace_back(points[i], defects[i]);
    }
    return report;
}

TypicalityReport latent_experiment(const ExperimentConfig& cfg, RunMode mode) {
    cfg.validate();
    if (cfg.epsilons.size() > 64) {
        throw std::invalid_argument("at most 64 epsilons are supported");
    }
    std::vector<char> is_latent(cfg.graph.size(), 0);
    for (const auto& label : cfg.latent) is_latent[cfg.graph.index_of(label)] = 1;
    std::vector<std::string> observed;
    for (std::size_t v = 0; v < cfg.graph.size(); ++v) {
        if (!is_latent[v]) observed.push_back(cfg.graph.label(static_cast<int>(v)));
    }
    const Admg projection = latent_project(cfg.graph, observed);
    const auto statements = enumerate_statements(projection, cfg.max_vertices);
    const auto cards = cfg.effective_cardinalities();

    std::vector<DrawOutcome> outcomes(cfg.samples);
    for_each_draw(cfg.samples, mode, [&](std::uint64_t i) {
        const std::uint64_t sub = derive_seed(cfg.seed, i);
        auto c_labels = [&](const SeparationStatement& st) {
            std::vector<std::string> c;
            for (int v : st.c) c.push_back(projection.label(v));
            return c;
        };
        if (cfg.family == Family::discrete) {
            const DiscreteBn bn = sample_parameters(cfg.graph, cards, sub, cfg.resolution);
            const JointTable t_obs = marginal(joint(bn), observed);
            outcomes[i] = summarize_draw(statements, cfg.epsilons,
                                         [&](const SeparationStatement& st) {
                                             return ci_defect(
                                                 t_obs, {projection.label(st.a)},
                                                 {projection.label(st.b)}, c_labels(st));
                                         });
        } else {
            const GaussianBn bn =
                sample_parameters_gaussian(cfg.graph, sub, cfg.resolution);
            const CovarianceMatrix sigma = covariance(bn);
            outcomes[i] = summarize_draw(statements, cfg.epsilons,
                                         [&](const SeparationStatement& st) {
                                             return ci_defect_gaussian(
                                                 sigma, {projection.label(st.a)},
                                                 {projection.label(st.b)}, c_labels(st));
                                         });
        }
    });
    return fold_outcomes(cfg, outcomes);
}

}  // namespace faithlab
