#ifndef FAITHLAB_INTERPOLATE_HPP
#define FAITHLAB_INTERPOLATE_HPP

#include <utility>
#include <vector>

#include "faithlab/discrete.hpp"
#include "faithlab/joint_table.hpp"
#include "faithlab/polynomial.hpp"

namespace faithlab {

// Endpoints of a Markov mixture: two networks over the same graph and
// state spaces.
struct InterpolationPath {
    InterpolationPath(DiscreteBn p0_in, DiscreteBn p1_in);
    DiscreteBn p0;
    DiscreteBn p1;
};

// Per-vertex, per-row convex combination of the endpoint kernels. The
// result is again a network over the same graph, hence Markov.
DiscreteBn interpolate(const InterpolationPath& path, const Rat& lambda);

// Cell-wise mixture of two joints. Generally *not* Markov for the graph
// that produced the endpoints.
JointTable naive_mixture(const JointTable& t0, const JointTable& t1, const Rat& lambda);

// Total variation of the observational distributions; a pseudometric on
// networks (distinct CPTs can share a joint).
Rat pseudo_distance(const DiscreteBn& m0, const DiscreteBn& m1);

// The signed defect polynomial of one cell (x_a, x_b, x_c):
//   q(lambda) = p(x_a,x_b,x_c) p(x_c) - p(x_a,x_c) p(x_b,x_c)
// under interpolate(path, lambda). `cell` concatenates states for a, b, c
// in that order. Degree <= 2|V|; recovered by exact evaluation at 2|V|+1
// rational nodes plus interpolation.
RationalPolynomial dependence_polynomial(const InterpolationPath& path,
                                         const std::vector<std::string>& a,
                                         const std::vector<std::string>& b,
                                         const std::vector<std::string>& c,
                                         const std::vector<int>& cell);

// Certified lower bound in (0, 1] below every positive root of the cell
// polynomials: for at least one cell the defect stays nonzero throughout
// (0, returned value). Requires ci_defect 0 at p0 and > 0 at p1.
Rat lambda_star(const InterpolationPath& path, const std::vector<std::string>& a,
                const std::vector<std::string>& b, const std::vector<std::string>& c);

// (lambda, d_TV(P_lambda, P_0)) along the grid.
std::vector<std::pair<Rat, Rat>> tv_convergence_profile(const InterpolationPath& path,
                                                        const std::vector<Rat>& grid);

}  // namespace faithlab

#endif
