#include "faithlab/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "faithlab/errors.hpp"

namespace faithlab {

namespace {

std::unordered_map<std::string, int> build_index(const std::vector<std::string>& labels) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty()) {
            throw invariant_error("empty vertex label");
        }
        if (!index.emplace(labels[i], static_cast<int>(i)).second) {
            throw invariant_error("duplicate vertex label '" + labels[i] + "'");
        }
    }
    return index;
}

int lookup(const std::unordered_map<std::string, int>& index, const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) {
        throw std::out_of_range("unknown vertex '" + label + "'");
    }
    return it->second;
}

// Kahn's algorithm over an adjacency structure; lowest declared index first.
// Returns an empty vector when a cycle remains.
std::vector<int> kahn_order(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<int>> out(n);
    for (const auto& [tail, head] : edges) {
        ++indegree[head];
        out[tail].push_back(head);
    }
    std::set<int> ready;
    for (std::size_t v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.insert(static_cast<int>(v));
    }
    std::vector<int> order;
    order.reserve(n);
    while (!ready.empty()) {
        const int v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (int w : out[v]) {
            if (--indegree[w] == 0) ready.insert(w);
        }
    }
    if (order.size() != n) return {};
    return order;
}

void check_query(std::size_t n, int a, int b, const std::vector<int>& c) {
    auto in_range = [n](int v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
    if (!in_range(a) || !in_range(b)) {
        throw std::out_of_range("query vertex out of range");
    }
    if (a == b) {
        throw std::invalid_argument("separation query requires a != b");
    }
    for (int v : c) {
        if (!in_range(v)) throw std::out_of_range("conditioning vertex out of range");
        if (v == a || v == b) {
            throw std::invalid_argument("conditioning set overlaps queried pair");
        }
    }
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> ancestors_impl(std::size_t n,
                                const std::vector<std::vector<int>>& parents,
                                const std::vector<int>& s) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int v : s) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
            throw std::out_of_range("vertex out of range in ancestor query");
        }
        if (!seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int p : parents[v]) {
            if (!seen[p]) {
                seen[p] = 1;
                stack.push_back(p);
            }
        }
    }
    std::vector<int> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (seen[v]) out.push_back(static_cast<int>(v));
    }
    return out;
}

// Reachability over arrival states. A state is (vertex, head) where `head`
// records whether the edge we arrived by carries an arrowhead at that
// vertex. At an interior vertex the junction is a collider exactly when
// both incident edge marks are heads; a collider passes when the vertex is
// an ancestor of C (C included), a non-collider passes when it is outside
// C. Covers d-separation (no bidirected edges) and m-separation alike.
bool separated_impl(std::size_t n,
                    const std::vector<std::vector<int>>& parents,
                    const std::vector<std::vector<int>>& children,
                    const std::vector<std::vector<int>>& siblings,
                    int a, int b, const std::vector<int>& c) {
    std::vector<char> in_c(n, 0);
    for (int v : c) in_c[v] = 1;
    std::vector<char> in_anc(n, 0);
    for (int v : ancestors_impl(n, parents, c)) in_anc[v] = 1;

    std::vector<char> visited(2 * n, 0);  // [head * n + vertex]
    std::vector<std::pair<int, bool>> stack;
    // Virtual start: arriving at `a` with a tail permits every continuation
    // because a is outside C by precondition.
    stack.emplace_back(a, false);
    visited[a] = 1;
    while (!stack.empty()) {
        const auto [v, head] = stack.back();
        stack.pop_back();
        if (v == b) return false;  // d-connected

        const bool collider_open = in_anc[v];
        const bool noncollider_open = !in_c[v];
        auto push = [&](int u, bool arrives_head) {
            const std::size_t key = (arrives_head ? n : 0) + static_cast<std::size_t>(u);
            if (!visited[key]) {
                visited[key] = 1;
                stack.emplace_back(u, arrives_head);
            }
        };
        // Continue to a parent p via p -> v: mark at v is a head.
        if ((head && collider_open) || (!head && noncollider_open)) {
            for (int p : parents[v]) push(p, false);
        }
        // Continue to a child via v -> c: mark at v is a tail.
        if (noncollider_open) {
            for (int ch : children[v]) push(ch, true);
        }
        // Continue along v <-> u: mark at v is a head.
        if ((head && collider_open) || (!head && noncollider_open)) {
            for (int u : siblings[v]) push(u, true);
        }
    }
    return true;
}

}  // namespace

Dag::Dag(std::vector<std::string> vertices,
         std::vector<std::pair<std::string, std::string>> edges)
    : labels_(std::move(vertices)) {
    const auto index = build_index(labels_);
    parents_.resize(labels_.size());
    children_.resize(labels_.size());
    std::set<std::pair<int, int>> seen;
    for (const auto& [tail, head] : edges) {
        const int t = lookup(index, tail);
        const int h = lookup(index, head);
        if (t == h) throw invariant_error("self-loop at '" + tail + "'");
        if (!seen.insert({t, h}).second) {
            throw invariant_error("duplicate edge " + tail + " -> " + head);
        }
    }
    edges_.assign(seen.begin(), seen.end());
    for (const auto& [t, h] : edges_) {
        parents_[h].push_back(t);
        children_[t].push_back(h);
    }
    if (kahn_order(labels_.size(), edges_).empty() && !labels_.empty()) {
        throw invariant_error("directed cycle detected");
    }
}

int Dag::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return static_cast<int>(i);
    }
    throw std::out_of_range("unknown vertex '" + label + "'");
}

bool Dag::has_edge(int tail, int head) const {
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(tail, head));
}

bool Dag::operator==(const Dag& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
}

Admg::Admg(std::vector<std::string> vertices,
           std::vector<std::pair<std::string, std::string>> directed,
           std::vector<std::pair<std::string, std::string>> bidirected)
    : labels_(std::move(vertices)) {
    const auto index = build_index(labels_);
    parents_.resize(labels_.size());
    children_.resize(labels_.size());
    siblings_.resize(labels_.size());
    std::set<std::pair<int, int>> dir;
    for (const auto& [tail, head] : directed) {
        const int t = lookup(index, tail);
        const int h = lookup(index, head);
        if (t == h) throw invariant_error("self-loop at '" + tail + "'");
        dir.insert({t, h});
    }
    directed_.assign(dir.begin(), dir.end());
    for (const auto& [t, h] : directed_) {
        parents_[h].push_back(t);
        children_[t].push_back(h);
    }
    if (kahn_order(labels_.size(), directed_).empty() && !labels_.empty()) {
        throw invariant_error("directed part has a cycle");
    }
    std::set<std::pair<int, int>> bi;
    for (const auto& [x, y] : bidirected) {
        const int u = lookup(index, x);
        const int v = lookup(index, y);
        if (u == v) throw invariant_error("bidirected self-loop at '" + x + "'");
        bi.insert({std::min(u, v), std::max(u, v)});
    }
    bidirected_.assign(bi.begin(), bi.end());
    for (const auto& [u, v] : bidirected_) {
        siblings_[u].push_back(v);
        siblings_[v].push_back(u);
    }
    for (auto& s : siblings_) s = sorted_unique(std::move(s));
}

int Admg::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return static_cast<int>(i);
    }
    throw std::out_of_range("unknown vertex '" + label + "'");
}

bool Admg::operator==(const Admg& other) const {
    return labels_ == other.labels_ && directed_ == other.directed_ &&
           bidirected_ == other.bidirected_;
}

std::vector<int> topological_order(const Dag& g) {
    auto order = kahn_order(g.size(), g.edges());
    if (order.empty() && g.size() > 0) {
        throw invariant_error("directed cycle detected");
    }
    return order;
}

std::vector<int> ancestors(const Dag& g, const std::vector<int>& s) {
    std::vector<std::vector<int>> parents(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) parents[v] = g.parents(static_cast<int>(v));
    return ancestors_impl(g.size(), parents, s);
}

std::vector<int> ancestors(const Admg& g, const std::vector<int>& s) {
    std::vector<std::vector<int>> parents(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) parents[v] = g.parents(static_cast<int>(v));
    return ancestors_impl(g.size(), parents, s);
}

bool d_separated(const Dag& g, int a, int b, const std::vector<int>& c) {
    check_query(g.size(), a, b, c);
    std::vector<std::vector<int>> parents(g.size()), children(g.size()),
        siblings(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        parents[v] = g.parents(static_cast<int>(v));
        children[v] = g.children(static_cast<int>(v));
    }
    return separated_impl(g.size(), parents, children, siblings, a, b, sorted_unique(c));
}

bool d_separated(const Dag& g, const std::string& a, const std::string& b,
                 const std::vector<std::string>& c) {
    std::vector<int> cs;
    for (const auto& label : c) cs.push_back(g.index_of(label));
    return d_separated(g, g.index_of(a), g.index_of(b), cs);
}

bool m_separated(const Admg& g, int a, int b, const std::vector<int>& c) {
    check_query(g.size(), a, b, c);
    std::vector<std::vector<int>> parents(g.size()), children(g.size()),
        siblings(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        parents[v] = g.parents(static_cast<int>(v));
        children[v] = g.children(static_cast<int>(v));
        siblings[v] = g.siblings(static_cast<int>(v));
    }
    return separated_impl(g.size(), parents, children, siblings, a, b, sorted_unique(c));
}

bool m_separated(const Admg& g, const std::string& a, const std::string& b,
                 const std::vector<std::string>& c) {
    std::vector<int> cs;
    for (const auto& label : c) cs.push_back(g.index_of(label));
    return m_separated(g, g.index_of(a), g.index_of(b), cs);
}

namespace {

// Depth-first enumeration of simple paths, applying the blocking
// definition literally: a path is active iff every collider on it is an
// ancestor of C and every non-collider is outside C.
bool find_active_path(const Dag& g, std::vector<int>& path, std::vector<char>& on_path,
                      int b, const std::vector<char>& in_c,
                      const std::vector<char>& in_anc) {
    const int v = path.back();
    auto try_next = [&](int u) {
        if (on_path[u]) return false;
        // The interior vertex v is fully determined once u is chosen;
        // prune blocked junctions before recursing.
        if (path.size() >= 2) {
            const int prev = path[path.size() - 2];
            const bool collider = g.has_edge(prev, v) && g.has_edge(u, v);
            if (collider ? !in_anc[v] : in_c[v]) return false;
        }
        if (u == b) return true;
        path.push_back(u);
        on_path[u] = 1;
        const bool found = find_active_path(g, path, on_path, b, in_c, in_anc);
        on_path[u] = 0;
        path.pop_back();
        return found;
    };
    for (int u : g.children(v)) {
        if (try_next(u)) return true;
    }
    for (int u : g.parents(v)) {
        if (try_next(u)) return true;
    }
    return false;
}

}  // namespace

bool d_separated_bruteforce(const Dag& g, int a, int b, const std::vector<int>& c) {
    check_query(g.size(), a, b, c);
    const auto cset = sorted_unique(c);
    std::vector<char> in_c(g.size(), 0), in_anc(g.size(), 0);
    for (int v : cset) in_c[v] = 1;
    for (int v : ancestors(g, cset)) in_anc[v] = 1;
    std::vector<int> path{a};
    std::vector<char> on_path(g.size(), 0);
    on_path[a] = 1;
    return !find_active_path(g, path, on_path, b, in_c, in_anc);
}

Admg latent_project(const Dag& g, const std::vector<std::string>& observed) {
    std::vector<char> is_observed(g.size(), 0);
    for (const auto& label : observed) {
        const int v = g.index_of(label);
        if (is_observed[v]) {
            throw std::invalid_argument("duplicate observed vertex '" + label + "'");
        }
        is_observed[v] = 1;
    }

    // Observed vertices reachable from `start`'s successors through latent
    // intermediates only.
    auto latent_reach = [&](int start) {
        std::vector<char> seen(g.size(), 0);
        std::vector<int> stack;
        std::vector<int> reached;
        for (int ch : g.children(start)) {
            if (!seen[ch]) {
                seen[ch] = 1;
                stack.push_back(ch);
            }
        }
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            if (is_observed[v]) {
                reached.push_back(v);
                continue;  // observed vertices terminate the latent path
            }
            for (int ch : g.children(v)) {
                if (!seen[ch]) {
                    seen[ch] = 1;
                    stack.push_back(ch);
                }
            }
        }
        std::sort(reached.begin(), reached.end());
        return reached;
    };

    std::vector<std::pair<std::string, std::string>> directed;
    std::vector<std::pair<std::string, std::string>> bidirected;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto reach = latent_reach(static_cast<int>(v));
        if (is_observed[v]) {
            for (int u : reach) {
                if (u != static_cast<int>(v)) {
                    directed.emplace_back(g.label(static_cast<int>(v)), g.label(u));
                }
            }
        } else {
            // A latent source with latent-only paths to two observed
            // vertices is exactly a bifurcation between them.
            for (std::size_t i = 0; i < reach.size(); ++i) {
                for (std::size_t j = i + 1; j < reach.size(); ++j) {
                    bidirected.emplace_back(g.label(reach[i]), g.label(reach[j]));
                }
            }
        }
    }
    return Admg(std::vector<std::string>(observed), std::move(directed),
                std::move(bidirected));
}

namespace {

template <typename G, typename SepFn>
std::vector<SeparationStatement> enumerate_impl(const G& g, std::size_t max_vertices,
                                                SepFn&& separated) {
    if (g.size() > max_vertices) {
        throw size_limit_error("graph has " + std::to_string(g.size()) +
                               " vertices, enumeration limit is " +
                               std::to_string(max_vertices));
    }
    const int n = static_cast<int>(g.size());
    std::vector<SeparationStatement> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            std::vector<int> rest;
            for (int v = 0; v < n; ++v) {
                if (v != a && v != b) rest.push_back(v);
            }
            const std::size_t subsets = std::size_t{1} << rest.size();
            for (std::size_t mask = 0; mask < subsets; ++mask) {
                SeparationStatement st;
                st.a = a;
                st.b = b;
                for (std::size_t bit = 0; bit < rest.size(); ++bit) {
                    if (mask & (std::size_t{1} << bit)) st.c.push_back(rest[bit]);
                }
                st.separated = separated(a, b, st.c);
                out.push_back(std::move(st));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<SeparationStatement> enumerate_statements(const Dag& g,
                                                      std::size_t max_vertices) {
    return enumerate_impl(g, max_vertices, [&](int a, int b, const std::vector<int>& c) {
        return d_separated(g, a, b, c);
    });
}

std::vector<SeparationStatement> enumerate_statements(const Admg& g,
                                                      std::size_t max_vertices) {
    return enumerate_impl(g, max_vertices, [&](int a, int b, const std::vector<int>& c) {
        return m_separated(g, a, b, c);
    });
}

}  // namespace faithlab
