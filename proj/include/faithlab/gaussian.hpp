#ifndef FAITHLAB_GAUSSIAN_HPP
#define FAITHLAB_GAUSSIAN_HPP

#include <cstdint>
#include <vector>

#include "faithlab/discrete.hpp"
#include "faithlab/graph.hpp"
#include "faithlab/rational.hpp"
#include "faithlab/report.hpp"

namespace faithlab {

// Linear structural-equation network: X_v = sum_p beta_{v,p} X_p + eps_v
// with Var(eps_v) = sigma_v^2 > 0 and zero means. Parameters are exact
// rationals, so vanishing conditional covariance is a decidable predicate.
class GaussianBn {
public:
    GaussianBn(Dag graph, std::vector<std::vector<Rat>> coefficients,
               std::vector<Rat> variances);

    const Dag& graph() const { return graph_; }
    // coefficients(v) aligns with graph().parents(v).
    const std::vector<Rat>& coefficients(int v) const { return coeffs_.at(v); }
    const Rat& variance(int v) const { return variances_.at(v); }

    bool operator==(const GaussianBn& other) const;

private:
    Dag graph_;
    std::vector<std::vector<Rat>> coeffs_;
    std::vector<Rat> variances_;
};

// Symmetric positive definite rational matrix over a vertex scope.
class CovarianceMatrix {
public:
    CovarianceMatrix(std::vector<std::string> scope,
                     std::vector<std::vector<Rat>> entries);

    const std::vector<std::string>& scope() const { return scope_; }
    const std::vector<std::vector<Rat>>& entries() const { return m_; }
    const Rat& at(int i, int j) const { return m_.at(i).at(j); }
    int position_of(const std::string& vertex) const;

    // All leading principal minors strictly positive, checked exactly.
    bool is_positive_definite() const;

private:
    std::vector<std::string> scope_;
    std::vector<std::vector<Rat>> m_;
};

// Exact covariance of the network by topological recursion.
CovarianceMatrix covariance(const GaussianBn& bn);

// Schur complement Sigma_AB - Sigma_AC Sigma_CC^{-1} Sigma_CB; the zero
// block characterizes X_A independent of X_B given X_C for the Gaussian law.
std::vector<std::vector<Rat>> conditional_covariance(const CovarianceMatrix& m,
                                                     const std::vector<std::string>& a,
                                                     const std::vector<std::string>& b,
                                                     const std::vector<std::string>& c);

Rat ci_defect_gaussian(const CovarianceMatrix& m, const std::vector<std::string>& a,
                       const std::vector<std::string>& b,
                       const std::vector<std::string>& c);
Rat ci_defect_gaussian(const GaussianBn& bn, const std::vector<std::string>& a,
                       const std::vector<std::string>& b,
                       const std::vector<std::string>& c);

// The A -> B -> C, A -> C network with beta_AC = -beta_AB * beta_BC, so the
// two paths from A to C cancel exactly. variances are (A, B, C).
GaussianBn cancelling_paths_bn(const Rat& beta_ab, const Rat& beta_bc,
                               const std::vector<Rat>& variances);

// beta ~ k/M with k uniform in {-2M..2M} \ {0}; sigma^2 ~ k/M with k uniform
// in {M/2..2M}. Deterministic given seed.
GaussianBn sample_parameters_gaussian(const Dag& g, std::uint64_t seed,
                                      std::uint64_t resolution = kDefaultResolution);

FaithfulnessReport check_faithful_gaussian(const GaussianBn& bn,
                                           std::size_t max_vertices = kDefaultMaxVertices);

}  // namespace faithlab

#endif
