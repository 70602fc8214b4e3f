#include "gm/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gm {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    rows_.assign(n, BitRow(n));
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += rows_[v].count();
    return total / 2;
}

void Graph::check_endpoints(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
}

void Graph::add_edge(int u, int v) {
    check_endpoints(u, v);
    rows_[u].set(v);
    rows_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
    check_endpoints(u, v);
    rows_[u].reset(v);
    rows_[v].reset(u);
}

void Graph::toggle_edge(int u, int v) {
    check_endpoints(u, v);
    rows_[u].flip(v);
    rows_[v].flip(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = rows_[u].next_set(u + 1); v != -1; v = rows_[u].next_set(v + 1))
            out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);  // duplicates collapse
    return g;
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
    if (p.size() != g.order())
        throw std::invalid_argument("permutation degree does not match graph order");
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(p(u), p(v));
    return h;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star needs at least 1 vertex");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("part sizes must be non-negative");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph grid_graph(int l, int m) {
    if (l < 1 || m < 1) throw std::invalid_argument("grid dimensions must be positive");
    Graph g(l * m);
    auto id = [m](int r, int c) { return r * m + c; };
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < m; ++c) {
            for (int c2 = c + 1; c2 < m; ++c2) g.add_edge(id(r, c), id(r, c2));
            for (int r2 = r + 1; r2 < l; ++r2) g.add_edge(id(r, c), id(r2, c));
        }
    return g;
}

Graph triangular_graph(int m) {
    if (m < 2) throw std::invalid_argument("triangular graph needs m >= 2");
    // pairs {i, j}, i < j, in colex order: {0,1},{0,2},{1,2},{0,3},...
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < m; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    Graph g(static_cast<int>(pairs.size()));
    for (size_t a = 0; a < pairs.size(); ++a)
        for (size_t b = a + 1; b < pairs.size(); ++b) {
            auto [i, j] = pairs[a];
            auto [k, l] = pairs[b];
            if (i == k || i == l || j == k || j == l)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return g;
}

Graph build_named(const std::string& name, const std::vector<int>& params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("catalog graph '" + name + "' expects " +
                                        std::to_string(k) + " parameter(s)");
    };
    if (name == "empty") { want(1); return empty_graph(params[0]); }
    if (name == "complete") { want(1); return complete_graph(params[0]); }
    if (name == "path") { want(1); return path_graph(params[0]); }
    if (name == "cycle") { want(1); return cycle_graph(params[0]); }
    if (name == "star") { want(1); return star_graph(params[0]); }
    if (name == "complete_bipartite") { want(2); return complete_bipartite(params[0], params[1]); }
    if (name == "grid") { want(2); return grid_graph(params[0], params[1]); }
    if (name == "triangular") { want(1); return triangular_graph(params[0]); }
    throw std::invalid_argument("unknown catalog graph: " + name);
}

std::vector<int> check_vertex_set(const Graph& g, const std::vector<int>& set) {
    std::vector<int> s = set;
    std::sort(s.begin(), s.end());
    for (size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 0 || s[k] >= g.order())
            throw std::invalid_argument("vertex out of range: " + std::to_string(s[k]));
        if (k > 0 && s[k] == s[k - 1])
            throw std::invalid_argument("vertex repeated in set: " + std::to_string(s[k]));
    }
    return s;
}

BitRow set_mask(int n, const std::vector<int>& set) {
    BitRow mask(n);
    for (int v : set) mask.set(v);
    return mask;
}

}  // namespace gm
