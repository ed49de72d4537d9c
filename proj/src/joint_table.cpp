#include "faithlab/joint_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "faithlab/errors.hpp"

namespace faithlab {

JointTable::JointTable(std::vector<std::string> scope, std::vector<int> cardinalities,
                       std::vector<Rat> probabilities)
    : scope_(std::move(scope)), cards_(std::move(cardinalities)),
      probs_(std::move(probabilities)) {
    if (scope_.size() != cards_.size()) {
        throw std::invalid_argument("scope/cardinality length mismatch");
    }
    std::size_t expected = 1;
    for (int card : cards_) {
        if (card < 2) throw invariant_error("cardinality below 2 in joint table");
        expected *= static_cast<std::size_t>(card);
    }
    if (probs_.size() != expected) {
        throw invariant_error("joint table has " + std::to_string(probs_.size()) +
                              " cells, expected " + std::to_string(expected));
    }
    Rat total = 0;
    for (const Rat& p : probs_) {
        if (p < 0) throw invariant_error("negative probability in joint table");
        total += p;
    }
    if (total != 1) {
        throw invariant_error("joint table mass is " + rat_str(total) + ", not 1");
    }
    strides_.assign(scope_.size(), 1);
    for (std::size_t k = scope_.size(); k-- > 1;) {
        strides_[k - 1] = strides_[k] * static_cast<std::size_t>(cards_[k]);
    }
}

JointTable JointTable::scalar() {
    return JointTable({}, {}, {Rat(1)});
}

int JointTable::position_of(const std::string& vertex) const {
    for (std::size_t k = 0; k < scope_.size(); ++k) {
        if (scope_[k] == vertex) return static_cast<int>(k);
    }
    throw std::out_of_range("vertex '" + vertex + "' not in table scope");
}

std::size_t JointTable::index_of(const std::vector<int>& config) const {
    if (config.size() != scope_.size()) {
        throw std::invalid_argument("configuration length mismatch");
    }
    std::size_t idx = 0;
    for (std::size_t k = 0; k < config.size(); ++k) {
        if (config[k] < 0 || config[k] >= cards_[k]) {
            throw std::out_of_range("state out of range in configuration");
        }
        idx += strides_[k] * static_cast<std::size_t>(config[k]);
    }
    return idx;
}

const Rat& JointTable::at(const std::vector<int>& config) const {
    return probs_[index_of(config)];
}

bool JointTable::operator==(const JointTable& other) const {
    return scope_ == other.scope_ && cards_ == other.cards_ && probs_ == other.probs_;
}

namespace {

// Positions of `subset` within the table scope, preserving scope order.
std::vector<int> scope_positions(const JointTable& t, const std::vector<std::string>& subset) {
    std::vector<char> wanted(t.scope().size(), 0);
    for (const auto& v : subset) {
        const int pos = t.position_of(v);
        if (wanted[pos]) throw std::invalid_argument("duplicate vertex '" + v + "'");
        wanted[pos] = 1;
    }
    std::vector<int> positions;
    for (std::size_t k = 0; k < t.scope().size(); ++k) {
        if (wanted[k]) positions.push_back(static_cast<int>(k));
    }
    return positions;
}

void next_config(std::vector<int>& config, const std::vector<int>& cards) {
    for (std::size_t k = config.size(); k-- > 0;) {
        if (++config[k] < cards[k]) return;
        config[k] = 0;
    }
}

}  // namespace

JointTable marginal(const JointTable& t, const std::vector<std::string>& keep) {
    const auto positions = scope_positions(t, keep);
    if (positions.size() == t.scope().size()) return t;

    std::vector<std::string> scope;
    std::vector<int> cards;
    for (int pos : positions) {
        scope.push_back(t.scope()[pos]);
        cards.push_back(t.cardinalities()[pos]);
    }
    std::size_t out_cells = 1;
    for (int card : cards) out_cells *= static_cast<std::size_t>(card);
    std::vector<Rat> probs(out_cells, Rat(0));

    std::vector<int> config(t.scope().size(), 0);
    for (std::size_t cell = 0; cell < t.cells(); ++cell) {
        std::size_t out_idx = 0;
        for (int pos : positions) {
            out_idx = out_idx * static_cast<std::size_t>(t.cardinalities()[pos]) +
                      static_cast<std::size_t>(config[pos]);
        }
        probs[out_idx] += t.probabilities()[cell];
        next_config(config, t.cardinalities());
    }
    return JointTable(std::move(scope), std::move(cards), std::move(probs));
}

namespace {

void check_disjoint(const JointTable& t, const std::vector<std::string>& a,
                    const std::vector<std::string>& b, const std::vector<std::string>& c) {
    std::vector<char> used(t.scope().size(), 0);
    for (const auto* set : {&a, &b, &c}) {
        for (const auto& v : *set) {
            const int pos = t.position_of(v);
            if (used[pos]) {
                throw std::invalid_argument("sets overlap at vertex '" + v + "'");
            }
            used[pos] = 1;
        }
    }
}

}  // namespace

Rat ci_defect(const JointTable& t, const std::vector<std::string>& a,
              const std::vector<std::string>& b, const std::vector<std::string>& c) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("ci_defect requires nonempty a and b");
    }
    check_disjoint(t, a, b, c);

    std::vector<std::string> abc;
    abc.insert(abc.end(), a.begin(), a.end());
    abc.insert(abc.end(), b.begin(), b.end());
    abc.insert(abc.end(), c.begin(), c.end());
    std::vector<std::string> ac(a);
    ac.insert(ac.end(), c.begin(), c.end());
    std::vector<std::string> bc(b);
    bc.insert(bc.end(), c.begin(), c.end());

    const JointTable t_abc = marginal(t, abc);
    const JointTable t_ac = marginal(t_abc, ac);
    const JointTable t_bc = marginal(t_abc, bc);
    const JointTable t_c = marginal(t_abc, c);

    // Project each full (a, b, c) configuration onto the marginal tables.
    auto projection = [&](const JointTable& sub) {
        std::vector<int> map;
        for (const auto& v : sub.scope()) map.push_back(t_abc.position_of(v));
        return map;
    };
    const auto map_ac = projection(t_ac);
    const auto map_bc = projection(t_bc);
    const auto map_c = projection(t_c);

    auto sub_index = [&](const JointTable& sub, const std::vector<int>& map,
                         const std::vector<int>& config) {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < map.size(); ++k) {
            idx = idx * static_cast<std::size_t>(sub.cardinalities()[k]) +
                  static_cast<std::size_t>(config[map[k]]);
        }
        return idx;
    };

    Rat best = 0;
    std::vector<int> config(t_abc.scope().size(), 0);
    for (std::size_t cell = 0; cell < t_abc.cells(); ++cell) {
        const Rat& p_abc = t_abc.probabilities()[cell];
        const Rat& p_ac = t_ac.probabilities()[sub_index(t_ac, map_ac, config)];
        const Rat& p_bc = t_bc.probabilities()[sub_index(t_bc, map_bc, config)];
        const Rat& p_c = t_c.probabilities()[sub_index(t_c, map_c, config)];
        Rat diff = p_abc * p_c - p_ac * p_bc;
        if (diff < 0) diff = -diff;
        if (diff > best) best = diff;
        next_config(config, t_abc.cardinalities());
    }
    return best;
}

bool is_ci(const JointTable& t, const std::vector<std::string>& a,
           const std::vector<std::string>& b, const std::vector<std::string>& c) {
    return ci_defect(t, a, b, c) == 0;
}

Rat tv_distance(const JointTable& t0, const JointTable& t1) {
    if (t0.scope() != t1.scope() || t0.cardinalities() != t1.cardinalities()) {
        throw std::invalid_argument("total variation requires identical scopes");
    }
    Rat sum = 0;
    for (std::size_t cell = 0; cell < t0.cells(); ++cell) {
        Rat diff = t0.probabilities()[cell] - t1.probabilities()[cell];
        if (diff < 0) diff = -diff;
        sum += diff;
    }
    return Rat(sum / 2);
}

}  // namespace faithlab
