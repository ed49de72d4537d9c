#ifndef FAITHLAB_GRAPH_HPP
#define FAITHLAB_GRAPH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace faithlab {

// Enumeration refuses graphs larger than this unless the caller overrides
// the limit (the CLI honours FAITHLAB_MAX_VERTICES).
inline constexpr std::size_t kDefaultMaxVertices = 12;

// Directed acyclic graph over labelled vertices. Immutable after
// construction; construction validates labels, endpoints, self-loops and
// acyclicity. All iteration orders derive from the declared vertex order.
class Dag {
public:
    Dag(std::vector<std::string> vertices,
        std::vector<std::pair<std::string, std::string>> edges);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& vertices() const { return labels_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int index_of(const std::string& label) const;  // throws std::out_of_range
    const std::string& label(int v) const { return labels_.at(v); }

    const std::vector<int>& parents(int v) const { return parents_.at(v); }
    const std::vector<int>& children(int v) const { return children_.at(v); }
    bool has_edge(int tail, int head) const;

    bool operator==(const Dag& other) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> parents_;
    std::vector<std::vector<int>> children_;
};

// Acyclic directed mixed graph: directed plus unordered bidirected edges,
// the image of a DAG under latent projection. A vertex pair may carry both
// a directed and a bidirected edge.
class Admg {
public:
    Admg(std::vector<std::string> vertices,
         std::vector<std::pair<std::string, std::string>> directed,
         std::vector<std::pair<std::string, std::string>> bidirected);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& vertices() const { return labels_; }
    const std::vector<std::pair<int, int>>& directed() const { return directed_; }
    // Stored with first < second, deduplicated, sorted.
    const std::vector<std::pair<int, int>>& bidirected() const { return bidirected_; }

    int index_of(const std::string& label) const;
    const std::string& label(int v) const { return labels_.at(v); }

    const std::vector<int>& parents(int v) const { return parents_.at(v); }
    const std::vector<int>& children(int v) const { return children_.at(v); }
    const std::vector<int>& siblings(int v) const { return siblings_.at(v); }

    bool operator==(const Admg& other) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> directed_;
    std::vector<std::pair<int, int>> bidirected_;
    std::vector<std::vector<int>> parents_;
    std::vector<std::vector<int>> children_;
    std::vector<std::vector<int>> siblings_;
};

// One separation query at singleton granularity together with its graph
// verdict. a != b, neither occurs in c.
struct SeparationStatement {
    int a = 0;
    int b = 0;
    std::vector<int> c;  // ascending vertex indices
    bool separated = false;

    bool operator==(const SeparationStatement& other) const {
        return a == other.a && b == other.b && c == other.c && separated == other.separated;
    }
};

// Kahn's procedure with ties broken by declared vertex order.
std::vector<int> topological_order(const Dag& g);

// s together with every vertex having a directed path into s.
std::vector<int> ancestors(const Dag& g, const std::vector<int>& s);
std::vector<int> ancestors(const Admg& g, const std::vector<int>& s);

bool d_separated(const Dag& g, int a, int b, const std::vector<int>& c);
bool d_separated(const Dag& g, const std::string& a, const std::string& b,
                 const std::vector<std::string>& c);

// Literal path-enumeration oracle; intended for |V| <= 8.
bool d_separated_bruteforce(const Dag& g, int a, int b, const std::vector<int>& c);

bool m_separated(const Admg& g, int a, int b, const std::vector<int>& c);
bool m_separated(const Admg& g, const std::string& a, const std::string& b,
                 const std::vector<std::string>& c);

// Projects onto `observed`: a -> b survives through latent-only directed
// paths, a <-> b appears for latent bifurcations.
Admg latent_project(const Dag& g, const std::vector<std::string>& observed);

// All (a, b, C) with a < b in declared order and C over all subsets of the
// remaining vertices, each with its separation verdict. Statement count is
// |V|(|V|-1)/2 * 2^(|V|-2).
std::vector<SeparationStatement> enumerate_statements(
    const Dag& g, std::size_t max_vertices = kDefaultMaxVertices);
std::vector<SeparationStatement> enumerate_statements(
    const Admg& g, std::size_t max_vertices = kDefaultMaxVertices);

}  // namespace faithlab

#endif
