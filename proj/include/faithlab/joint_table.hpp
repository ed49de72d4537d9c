#ifndef FAITHLAB_JOINT_TABLE_HPP
#define FAITHLAB_JOINT_TABLE_HPP

#include <string>
#include <vector>

#include "faithlab/rational.hpp"

namespace faithlab {

// An exact probability table over a product state space. Entries are
// nonnegative rationals summing exactly to 1; construction enforces both.
// The empty-scope table is the scalar 1.
class JointTable {
public:
    JointTable(std::vector<std::string> scope, std::vector<int> cardinalities,
               std::vector<Rat> probabilities);

    static JointTable scalar();

    const std::vector<std::string>& scope() const { return scope_; }
    const std::vector<int>& cardinalities() const { return cards_; }
    const std::vector<Rat>& probabilities() const { return probs_; }
    std::size_t cells() const { return probs_.size(); }

    int position_of(const std::string& vertex) const;  // throws std::out_of_range

    // Row-major cell index; config[k] is the state of scope()[k], the last
    // scope vertex varying fastest.
    std::size_t index_of(const std::vector<int>& config) const;
    const Rat& at(const std::vector<int>& config) const;

    bool operator==(const JointTable& other) const;

private:
    std::vector<std::string> scope_;
    std::vector<int> cards_;
    std::vector<Rat> probs_;
    std::vector<std::size_t> strides_;
};

// Sums out scope \ keep; the result preserves t's scope order.
JointTable marginal(const JointTable& t, const std::vector<std::string>& keep);

// max over cells (x_a, x_b, x_c) of |p(ab c)p(c) - p(ac)p(bc)|. Zero exactly
// at conditional independence. a and b must be nonempty; the three sets are
// pairwise disjoint subsets of the scope.
Rat ci_defect(const JointTable& t, const std::vector<std::string>& a,
              const std::vector<std::string>& b, const std::vector<std::string>& c);

bool is_ci(const JointTable& t, const std::vector<std::string>& a,
           const std::vector<std::string>& b, const std::vector<std::string>& c);

// Half the L1 distance: the finite-space total variation metric.
Rat tv_distance(const JointTable& t0, const JointTable& t1);

}  // namespace faithlab

#endif
