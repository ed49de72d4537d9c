#include "faithlab/gaussian.hpp"

#include <stdexcept>

#include "faithlab/errors.hpp"
#include "faithlab/rng.hpp"

namespace faithlab {

GaussianBn::GaussianBn(Dag graph, std::vector<std::vector<Rat>> coefficients,
                       std::vector<Rat> variances)
    : graph_(std::move(graph)), coeffs_(std::move(coefficients)),
      variances_(std::move(variances)) {
    const std::size_t n = graph_.size();
    if (coeffs_.size() != n || variances_.size() != n) {
        throw std::invalid_argument("coefficient/variance count must match vertex count");
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (coeffs_[v].size() != graph_.parents(static_cast<int>(v)).size()) {
            throw invariant_error("coefficient count of '" +
                                  graph_.label(static_cast<int>(v)) +
                                  "' does not match its parents");
        }
        if (variances_[v] <= 0) {
            throw invariant_error("variance of '" + graph_.label(static_cast<int>(v)) +
                                  "' is not positive");
        }
    }
}

bool GaussianBn::operator==(const GaussianBn& other) const {
    return graph_ == other.graph_ && coeffs_ == other.coeffs_ &&
           variances_ == other.variances_;
}

CovarianceMatrix::CovarianceMatrix(std::vector<std::string> scope,
                                   std::vector<std::vector<Rat>> entries)
    : scope_(std::move(scope)), m_(std::move(entries)) {
    const std::size_t n = scope_.size();
    if (m_.size() != n) throw invariant_error("covariance matrix size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (m_[i].size() != n) throw invariant_error("covariance matrix not square");
        for (std::size_t j = 0; j < i; ++j) {
            if (m_[i][j] != m_[j][i]) {
                throw invariant_error("covariance matrix not symmetric");
            }
        }
    }
}

int CovarianceMatrix::position_of(const std::string& vertex) const {
    for (std::size_t k = 0; k < scope_.size(); ++k) {
        if (scope_[k] == vertex) return static_cast<int>(k);
    }
    throw std::out_of_range("vertex '" + vertex + "' not in covariance scope");
}

namespace {

// Determinant by exact Gaussian elimination.
Rat determinant(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const Rat factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) {
                m[row][k] -= factor * m[col][k];
            }
        }
    }
    return det;
}

// Solves M X = B for X by exact elimination; M square nonsingular.
std::vector<std::vector<Rat>> solve(std::vector<std::vector<Rat>> m,
                                    std::vector<std::vector<Rat>> b) {
    const std::size_t n = m.size();
    const std::size_t w = b.empty() ? 0 : b[0].size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) {
            throw invariant_error("singular conditioning covariance block");
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rat factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
            for (std::size_t k = 0; k < w; ++k) b[row][k] -= factor * b[col][k];
        }
    }
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t k = 0; k < w; ++k) b[row][k] /= m[row][row];
    }
    return b;
}

}  // namespace

bool CovarianceMatrix::is_positive_definite() const {
    const std::size_t n = scope_.size();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rat>> leading(k, std::vector<Rat>(k));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) leading[i][j] = m_[i][j];
        }
        if (determinant(std::move(leading)) <= 0) return false;
    }
    return true;
}

CovarianceMatrix covariance(const GaussianBn& bn) {
    const Dag& g = bn.graph();
    const std::size_t n = g.size();
    std::vector<std::vector<Rat>> sigma(n, std::vector<Rat>(n, Rat(0)));
    std::vector<int> processed;
    for (int v : topological_order(g)) {
        const auto& parents = g.parents(v);
        const auto& beta = bn.coefficients(v);
        // Cross-covariances with every earlier vertex, then the diagonal.
        for (int u : processed) {
            Rat cov = 0;
            for (std::size_t k = 0; k < parents.size(); ++k) {
                cov += beta[k] * sigma[parents[k]][u];
            }
            sigma[v][u] = cov;
            sigma[u][v] = cov;
        }
        Rat var = bn.variance(v);
        for (std::size_t k = 0; k < parents.size(); ++k) {
            for (std::size_t l = 0; l < parents.size(); ++l) {
                var += beta[k] * beta[l] * sigma[parents[k]][parents[l]];
            }
        }
        sigma[v][v] = var;
        processed.push_back(v);
    }
    return CovarianceMatrix(g.vertices(), std::move(sigma));
}

namespace {

std::vector<int> positions(const CovarianceMatrix& m, const std::vector<std::string>& set) {
    std::vector<int> out;
    for (const auto& v : set) out.push_back(m.position_of(v));
    return out;
}

std::vector<std::vector<Rat>> block(const CovarianceMatrix& m, const std::vector<int>& rows,
                                    const std::vector<int>& cols) {
    std::vector<std::vector<Rat>> out(rows.size(), std::vector<Rat>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out[i][j] = m.at(rows[i], cols[j]);
        }
    }
    return out;
}

void check_disjoint_sets(const std::vector<std::string>& a,
                         const std::vector<std::string>& b,
                         const std::vector<std::string>& c) {
    std::vector<std::string> all;
    for (const auto* set : {&a, &b, &c}) {
        for (const auto& v : *set) {
            for (const auto& seen : all) {
                if (seen == v) {
                    throw std::invalid_argument("sets overlap at vertex '" + v + "'");
                }
            }
            all.push_back(v);
        }
    }
}

}  // namespace

std::vector<std::vector<Rat>> conditional_covariance(const CovarianceMatrix& m,
                                                     const std::vector<std::string>& a,
                                                     const std::vector<std::string>& b,
                                                     const std::vector<std::string>& c) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("conditional covariance requires nonempty a and b");
    }
    check_disjoint_sets(a, b, c);
    const auto pa = positions(m, a);
    const auto pb = positions(m, b);
    const auto pc = positions(m, c);

    auto s_ab = block(m, pa, pb);
    if (pc.empty()) return s_ab;

    const auto s_cc = block(m, pc, pc);
    const auto s_cb = block(m, pc, pb);
    const auto s_ac = block(m, pa, pc);
    const auto x = solve(s_cc, s_cb);  // Sigma_CC^{-1} Sigma_CB
    for (std::size_t i = 0; i < pa.size(); ++i) {
        for (std::size_t j = 0; j < pb.size(); ++j) {
            Rat dot = 0;
            for (std::size_t k = 0; k < pc.size(); ++k) dot += s_ac[i][k] * x[k][j];
            s_ab[i][j] -= dot;
        }
    }
    return s_ab;
}

Rat ci_defect_gaussian(const CovarianceMatrix& m, const std::vector<std::string>& a,
                       const std::vector<std::string>& b,
                       const std::vector<std::string>& c) {
    const auto cond = conditional_covariance(m, a, b, c);
    Rat best = 0;
    for (const auto& row : cond) {
        for (const Rat& entry : row) {
            Rat mag = entry < 0 ? Rat(-entry) : entry;
            if (mag > best) best = mag;
        }
    }
    return best;
}

Rat ci_defect_gaussian(const GaussianBn& bn, const std::vector<std::string>& a,
                       const std::vector<std::string>& b,
                       const std::vector<std::string>& c) {
    return ci_defect_gaussian(covariance(bn), a, b, c);
}

GaussianBn cancelling_paths_bn(const Rat& beta_ab, const Rat& beta_bc,
                               const std::vector<Rat>& variances) {
    if (variances.size() != 3) {
        throw std::invalid_argument("expected variances for (A, B, C)");
    }
    Dag g({"A", "B", "C"}, {{"A", "B"}, {"A", "C"}, {"B", "C"}});
    // coefficients align with ascending parent order: B <- (A), C <- (A, B)
    const Rat beta_ac = Rat(-beta_ab * beta_bc);
    std::vector<std::vector<Rat>> coeffs(3);
    coeffs[0] = {};
    coeffs[1] = {beta_ab};
    coeffs[2] = {beta_ac, beta_bc};
    return GaussianBn(std::move(g), std::move(coeffs), variances);
}

GaussianBn sample_parameters_gaussian(const Dag& g, std::uint64_t seed,
                                      std::uint64_t resolution) {
    if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
    Rng rng(seed);
    const mpz_class m(static_cast<unsigned long>(resolution));
    std::vector<std::vector<Rat>> coeffs(g.size());
    std::vector<Rat> variances(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        for (std::size_t k = 0; k < g.parents(static_cast<int>(v)).size(); ++k) {
            // k' uniform in {-2M..2M} without 0
            const std::uint64_t draw = rng.below(4 * resolution);
            long offset = static_cast<long>(draw) - static_cast<long>(2 * resolution);
            if (offset >= 0) ++offset;
            Rat beta(mpz_class(offset), m);
            beta.canonicalize();
            coeffs[v].push_back(beta);
        }
        const std::uint64_t lo = resolution / 2;
        const std::uint64_t draw = lo + rng.below(2 * resolution - lo + 1);
        Rat var(mpz_class(static_cast<unsigned long>(draw)), m);
        var.canonicalize();
        variances[v] = var;
    }
    return GaussianBn(g, std::move(coeffs), std::move(variances));
}

FaithfulnessReport check_faithful_gaussian(const GaussianBn& bn,
                                           std::size_t max_vertices) {
    const CovarianceMatrix sigma = covariance(bn);
    const auto statements = enumerate_statements(bn.graph(), max_vertices);
    std::vector<StatementDefect> defects;
    defects.reserve(statements.size());
    for (const auto& st : statements) {
        std::vector<std::string> c;
        for (int v : st.c) c.push_back(bn.graph().label(v));
        StatementDefect sd;
        sd.statement = st;
        sd.defect = ci_defect_gaussian(sigma, {bn.graph().label(st.a)},
                                       {bn.graph().label(st.b)}, c);
        defects.push_back(std::move(sd));
    }
    return classify_statements(std::move(defects));
}

}  // namespace faithlab
