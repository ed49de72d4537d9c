#include "faithlab/interpolate.hpp"

#include <stdexcept>

namespace faithlab {

InterpolationPath::InterpolationPath(DiscreteBn p0_in, DiscreteBn p1_in)
    : p0(std::move(p0_in)), p1(std::move(p1_in)) {
    if (!(p0.graph() == p1.graph())) {
        throw std::invalid_argument("interpolation endpoints have different graphs");
    }
    if (p0.cardinalities() != p1.cardinalities()) {
        throw std::invalid_argument("interpolation endpoints have different state spaces");
    }
}

DiscreteBn interpolate(const InterpolationPath& path, const Rat& lambda) {
    if (lambda < 0 || lambda > 1) {
        throw std::invalid_argument("lambda must lie in [0, 1]");
    }
    const Dag& g = path.p0.graph();
    std::vector<Cpt> cpts(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        const Cpt& c0 = path.p0.cpt(static_cast<int>(v));
        const Cpt& c1 = path.p1.cpt(static_cast<int>(v));
        cpts[v].parents = c0.parents;
        cpts[v].rows.resize(c0.rows.size());
        for (std::size_t r = 0; r < c0.rows.size(); ++r) {
            auto& row = cpts[v].rows[r];
            row.resize(c0.rows[r].size());
            for (std::size_t s = 0; s < row.size(); ++s) {
                row[s] = Rat((1 - lambda) * c0.rows[r][s] + lambda * c1.rows[r][s]);
            }
        }
    }
    return DiscreteBn(g, path.p0.cardinalities(), std::move(cpts));
}

JointTable naive_mixture(const JointTable& t0, const JointTable& t1, const Rat& lambda) {
    if (lambda < 0 || lambda > 1) {
        throw std::invalid_argument("lambda must lie in [0, 1]");
    }
    if (t0.scope() != t1.scope() || t0.cardinalities() != t1.cardinalities()) {
        throw std::invalid_argument("mixture requires identical scopes");
    }
    std::vector<Rat> probs(t0.cells());
    for (std::size_t cell = 0; cell < t0.cells(); ++cell) {
        probs[cell] = Rat((1 - lambda) * t0.probabilities()[cell] +
                          lambda * t1.probabilities()[cell]);
    }
    return JointTable(t0.scope(), t0.cardinalities(), std::move(probs));
}

Rat pseudo_distance(const DiscreteBn& m0, const DiscreteBn& m1) {
    if (!(m0.graph() == m1.graph()) || m0.cardinalities() != m1.cardinalities()) {
        throw std::invalid_argument("pseudo distance requires matching networks");
    }
    return tv_distance(joint(m0), joint(m1));
}

namespace {

struct CellEvaluator {
    // Signed defect values of all (a, b, c) cells at the interpolation
    // nodes, cell index row-major over the concatenated (a, b, c) scope.
    std::vector<Rat> nodes;
    std::vector<std::vector<Rat>> values;  // values[cell][node]
    std::vector<int> cell_cards;
};

CellEvaluator evaluate_cells(const InterpolationPath& path,
                             const std::vector<std::string>& a,
                             const std::vector<std::string>& b,
                             const std::vector<std::string>& c) {
    const Dag& g = path.p0.graph();
    const int degree_bound = 2 * static_cast<int>(g.size());

    CellEvaluator ev;
    std::vector<std::string> abc;
    abc.insert(abc.end(), a.begin(), a.end());
    abc.insert(abc.end(), b.begin(), b.end());
    abc.insert(abc.end(), c.begin(), c.end());
    std::vector<std::string> ac(a);
    ac.insert(ac.end(), c.begin(), c.end());
    std::vector<std::string> bc(b);
    bc.insert(bc.end(), c.begin(), c.end());

    const JointTable probe = joint(path.p0);
    for (const auto& v : abc) {
        ev.cell_cards.push_back(probe.cardinalities()[probe.position_of(v)]);
    }
    std::size_t cell_count = 1;
    for (int card : ev.cell_cards) cell_count *= static_cast<std::size_t>(card);
    ev.values.assign(cell_count, {});

    for (int j = 0; j <= degree_bound; ++j) {
        const Rat lambda = rat(j, degree_bound == 0 ? 1 : degree_bound * 2);
        ev.nodes.push_back(lambda);
        const JointTable t = joint(interpolate(path, lambda));
        const JointTable t_abc = marginal(t, abc);
        const JointTable t_ac = marginal(t_abc, ac);
        const JointTable t_bc = marginal(t_abc, bc);
        const JointTable t_c = marginal(t_abc, c);

        std::vector<int> config(abc.size(), 0);
        for (std::size_t cell = 0; cell < cell_count; ++cell) {
            auto value_in = [&](const JointTable& sub) {
                std::size_t idx = 0;
                for (const auto& v : sub.scope()) {
                    std::size_t k = 0;
                    while (abc[k] != v) ++k;
                    idx = idx * static_cast<std::size_t>(
                                    sub.cardinalities()[sub.position_of(v)]) +
                          static_cast<std::size_t>(config[k]);
                }
                return sub.probabilities()[idx];
            };
            const Rat p_abc = value_in(t_abc);
            const Rat p_ac = value_in(t_ac);
            const Rat p_bc = value_in(t_bc);
            const Rat p_c = value_in(t_c);
            ev.values[cell].push_back(Rat(p_abc * p_c - p_ac * p_bc));
            for (std::size_t k = config.size(); k-- > 0;) {
                if (++config[k] < ev.cell_cards[k]) break;
                config[k] = 0;
            }
        }
    }
    return ev;
}

RationalPolynomial cell_polynomial(const CellEvaluator& ev, std::size_t cell) {
    std::vector<std::pair<Rat, Rat>> points;
    for (std::size_t j = 0; j < ev.nodes.size(); ++j) {
        points.emplace_back(ev.nodes[j], ev.values[cell][j]);
    }
    return interpolate_polynomial(points);
}

}  // namespace

RationalPolynomial dependence_polynomial(const InterpolationPath& path,
                                         const std::vector<std::string>& a,
                                         const std::vector<std::string>& b,
                                         const std::vector<std::string>& c,
                                         const std::vector<int>& cell) {
    const auto ev = evaluate_cells(path, a, b, c);
    if (cell.size() != ev.cell_cards.size()) {
        throw std::invalid_argument("cell length does not match (a, b, c)");
    }
    std::size_t idx = 0;
    for (std::size_t k = 0; k < cell.size(); ++k) {
        if (cell[k] < 0 || cell[k] >= ev.cell_cards[k]) {
            throw std::out_of_range("cell state out of range");
        }
        idx = idx * static_cast<std::size_t>(ev.cell_cards[k]) +
              static_cast<std::size_t>(cell[k]);
    }
    return cell_polynomial(ev, idx);
}

Rat lambda_star(const InterpolationPath& path, const std::vector<std::string>& a,
                const std::vector<std::string>& b, const std::vector<std::string>& c) {
    if (ci_defect(joint(path.p0), a, b, c) != 0) {
        throw std::invalid_argument("p0 must satisfy the conditional independence");
    }
    if (ci_defect(joint(path.p1), a, b, c) == 0) {
        throw std::invalid_argument("p1 must violate the conditional independence");
    }
    const auto ev = evaluate_cells(path, a, b, c);
    bool any = false;
    Rat best = 0;
    for (std::size_t cell = 0; cell < ev.values.size(); ++cell) {
        const RationalPolynomial q = cell_polynomial(ev, cell);
        if (q.is_zero()) continue;
        const Rat bound = positive_root_floor(q);
        if (!any || bound > best) {
            best = bound;
            any = true;
        }
    }
    if (!any) {
        throw std::runtime_error("degenerate path: every cell polynomial vanishes");
    }
    return best;
}

std::vector<std::pair<Rat, Rat>> tv_convergence_profile(const InterpolationPath& path,
                                                        const std::vector<Rat>& grid) {
    const JointTable t0 = joint(path.p0);
    std::vector<std::pair<Rat, Rat>> out;
    out.reserve(grid.size());
    for (const Rat& lambda : grid) {
        out.emplace_back(lambda, tv_distance(joint(interpolate(path, lambda)), t0));
    }
    return out;
}

}  // namespace faithlab
