#include "faithlab/discrete.hpp"

#include <algorithm>
#include <stdexcept>

#include "faithlab/errors.hpp"
#include "faithlab/rng.hpp"

namespace faithlab {

DiscreteBn::DiscreteBn(Dag graph, std::vector<int> cardinalities, std::vector<Cpt> cpts)
    : graph_(std::move(graph)), cards_(std::move(cardinalities)), cpts_(std::move(cpts)) {
    const std::size_t n = graph_.size();
    if (cards_.size() != n || cpts_.size() != n) {
        throw std::invalid_argument("cardinalities/CPT count must match vertex count");
    }
    for (int card : cards_) {
        if (card < 2) throw invariant_error("cardinality below 2");
    }
    for (std::size_t v = 0; v < n; ++v) {
        const Cpt& cpt = cpts_[v];
        const std::string& name = graph_.label(static_cast<int>(v));
        if (cpt.parents != graph_.parents(static_cast<int>(v))) {
            throw invariant_error("CPT parents of '" + name +
                                  "' do not match the graph");
        }
        std::size_t expected_rows = 1;
        for (int p : cpt.parents) expected_rows *= static_cast<std::size_t>(cards_[p]);
        if (cpt.rows.size() != expected_rows) {
            throw invariant_error("CPT of '" + name + "' has " +
                                  std::to_string(cpt.rows.size()) + " rows, expected " +
                                  std::to_string(expected_rows));
        }
        for (std::size_t r = 0; r < cpt.rows.size(); ++r) {
            const auto& row = cpt.rows[r];
            if (row.size() != static_cast<std::size_t>(cards_[v])) {
                throw invariant_error("CPT row " + std::to_string(r) + " of '" + name +
                                      "' has wrong width");
            }
            Rat sum = 0;
            for (const Rat& p : row) {
                if (p < 0) {
                    throw invariant_error("negative entry in CPT row " +
                                          std::to_string(r) + " of '" + name + "'");
                }
                sum += p;
            }
            if (sum != 1) {
                throw invariant_error("CPT row " + std::to_string(r) + " of '" + name +
                                      "' sums to " + rat_str(sum) + ", not 1");
            }
        }
    }
}

std::size_t DiscreteBn::row_index(int v, const std::vector<int>& full_config) const {
    std::size_t idx = 0;
    for (int p : cpts_[v].parents) {
        idx = idx * static_cast<std::size_t>(cards_[p]) +
              static_cast<std::size_t>(full_config[p]);
    }
    return idx;
}

bool DiscreteBn::operator==(const DiscreteBn& other) const {
    if (!(graph_ == other.graph_) || cards_ != other.cards_) return false;
    for (std::size_t v = 0; v < cpts_.size(); ++v) {
        if (cpts_[v].parents != other.cpts_[v].parents) return false;
        if (cpts_[v].rows != other.cpts_[v].rows) return false;
    }
    return true;
}

JointTable joint(const DiscreteBn& bn) {
    const std::size_t n = bn.graph().size();
    std::size_t cells = 1;
    for (int card : bn.cardinalities()) cells *= static_cast<std::size_t>(card);

    std::vector<Rat> probs;
    probs.reserve(cells);
    std::vector<int> config(n, 0);
    for (std::size_t cell = 0; cell < cells; ++cell) {
        Rat p = 1;
        for (std::size_t v = 0; v < n; ++v) {
            const auto& row = bn.cpt(static_cast<int>(v))
                                  .rows[bn.row_index(static_cast<int>(v), config)];
            p *= row[config[v]];
        }
        probs.push_back(p);
        // advance row-major: last vertex fastest
        for (std::size_t k = n; k-- > 0;) {
            if (++config[k] < bn.cardinalities()[k]) break;
            config[k] = 0;
        }
    }
    return JointTable(bn.graph().vertices(), bn.cardinalities(), std::move(probs));
}

DiscreteBn sample_parameters(const Dag& g, const std::vector<int>& cardinalities,
                             std::uint64_t seed, std::uint64_t resolution) {
    if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
    if (cardinalities.size() != g.size()) {
        throw std::invalid_argument("cardinality count must match vertex count");
    }
    Rng rng(seed);
    std::vector<Cpt> cpts(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        Cpt& cpt = cpts[v];
        cpt.parents = g.parents(static_cast<int>(v));
        std::size_t rows = 1;
        for (int p : cpt.parents) rows *= static_cast<std::size_t>(cardinalities[p]);
        const int k = cardinalities[v];
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<Rat> weights(k);
            Rat total = 0;
            for (int s = 0; s < k; ++s) {
                const std::uint64_t w = 1 + rng.below(resolution);
                weights[s] = Rat(mpz_class(static_cast<unsigned long>(w)));
                total += weights[s];
            }
            for (int s = 0; s < k; ++s) weights[s] /= total;
            cpt.rows.push_back(std::move(weights));
        }
    }
    return DiscreteBn(g, cardinalities, std::move(cpts));
}

FaithfulnessReport check_faithful(const DiscreteBn& bn, std::size_t max_vertices) {
    const JointTable t = joint(bn);
    const auto statements = enumerate_statements(bn.graph(), max_vertices);
    std::vector<StatementDefect> defects;
    defects.reserve(statements.size());
    for (const auto& st : statements) {
        std::vector<std::string> c;
        for (int v : st.c) c.push_back(bn.graph().label(v));
        StatementDefect sd;
        sd.statement = st;
        sd.defect = ci_defect(t, {bn.graph().label(st.a)}, {bn.graph().label(st.b)}, c);
        defects.push_back(std::move(sd));
    }
    return classify_statements(std::move(defects));
}

namespace {

void check_kernel(const std::vector<std::vector<Rat>>& rows, std::size_t expected_rows,
                  const char* what) {
    if (rows.size() != expected_rows) {
        throw std::invalid_argument(std::string(what) + " has wrong row count");
    }
}

}  // namespace

DiscreteBn deterministic_variable_bn(const std::vector<int>& cardinalities,
                                     const std::vector<std::vector<Rat>>& a_given_b,
                                     const std::vector<std::vector<Rat>>& c_given_b,
                                     int atom) {
    if (cardinalities.size() != 3) {
        throw std::invalid_argument("expected cardinalities for (A, B, C)");
    }
    const int card_b = cardinalities[1];
    if (atom < 0 || atom >= card_b) {
        throw std::invalid_argument("atom out of range for B");
    }
    check_kernel(a_given_b, static_cast<std::size_t>(card_b), "A|B kernel");
    check_kernel(c_given_b, static_cast<std::size_t>(card_b), "C|B kernel");

    Dag g({"A", "B", "C"}, {{"B", "A"}, {"B", "C"}});
    std::vector<Rat> point(card_b, Rat(0));
    point[atom] = 1;
    std::vector<Cpt> cpts(3);
    cpts[0] = {{1}, a_given_b};
    cpts[1] = {{}, {point}};
    cpts[2] = {{1}, c_given_b};
    return DiscreteBn(std::move(g), cardinalities, std::move(cpts));
}

DiscreteBn deterministic_relation_bn(const std::vector<int>& cardinalities,
                                     const std::vector<std::vector<Rat>>& a_given_d,
                                     const std::vector<std::vector<Rat>>& c_given_d,
                                     const std::vector<Rat>& d_prior) {
    if (cardinalities.size() != 4) {
        throw std::invalid_argument("expected cardinalities for (A, B, C, D)");
    }
    const int card_b = cardinalities[1];
    const int card_d = cardinalities[3];
    if (card_b != card_d) {
        throw std::invalid_argument("identity kernel requires card(B) == card(D)");
    }
    check_kernel(a_given_d, static_cast<std::size_t>(card_d), "A|D kernel");
    check_kernel(c_given_d, static_cast<std::size_t>(card_d), "C|D kernel");

    Dag g({"A", "B", "C", "D"}, {{"D", "A"}, {"D", "B"}, {"D", "C"}});
    std::vector<std::vector<Rat>> identity;
    for (int d = 0; d < card_d; ++d) {
        std::vector<Rat> row(card_b, Rat(0));
        row[d] = 1;
        identity.push_back(std::move(row));
    }
    std::vector<Cpt> cpts(4);
    cpts[0] = {{3}, a_given_d};
    cpts[1] = {{3}, identity};
    cpts[2] = {{3}, c_given_d};
    cpts[3] = {{}, {d_prior}};
    return DiscreteBn(std::move(g), cardinalities, std::move(cpts));
}

DiscreteBn dependent_binary_bn(const Dag& g, int a, int b, const std::vector<int>& c,
                               std::uint64_t seed, int retry_budget, int* retries_out) {
    const std::vector<int> cards(g.size(), 2);
    if (retries_out) *retries_out = 0;

    if (a == b) {
        for (int v : c) {
            if (v == a) {
                throw std::invalid_argument("conditioning set contains the queried vertex");
            }
        }
        // Independent product network: every variable Bernoulli(1/2)
        // regardless of parents. Markov, and trivially dependent on itself.
        std::vector<Cpt> cpts(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) {
            cpts[v].parents = g.parents(static_cast<int>(v));
            std::size_t rows = 1;
            for (int p : cpts[v].parents) rows *= static_cast<std::size_t>(cards[p]);
            cpts[v].rows.assign(rows, {rat(1, 2), rat(1, 2)});
        }
        return DiscreteBn(g, cards, std::move(cpts));
    }

    if (d_separated(g, a, b, c)) {
        throw std::invalid_argument("pair is d-separated given c; no Markov dependence exists");
    }
    std::vector<std::string> c_labels;
    for (int v : c) c_labels.push_back(g.label(v));

    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        DiscreteBn bn = sample_parameters(g, cards, derive_seed(seed, attempt));
        if (ci_defect(joint(bn), {g.label(a)}, {g.label(b)}, c_labels) > 0) {
            if (retries_out) *retries_out = attempt;
            return bn;
        }
    }
    throw std::runtime_error("dependence search failed within " +
                             std::to_string(retry_budget) + " attempts");
}

}  // namespace faithlab
