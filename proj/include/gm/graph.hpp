#ifndef GM_GRAPH_HPP
#define GM_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "gm/bitrow.hpp"
#include "gm/permutation.hpp"

namespace gm {

// Simple undirected graph on vertices {0..n-1}; adjacency kept as one
// BitRow per vertex.  No loops, no multi-edges.  All toolkit operations
// treat Graph values as immutable and return fresh graphs.
class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const;

    bool adjacent(int u, int v) const { return row(u).test(v); }
    int degree(int v) const { return row(v).count(); }
    const BitRow& row(int v) const {
        assert(0 <= v && v < n_);
        return rows_[v];
    }

    // Throws std::invalid_argument on loops or out-of-range endpoints.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    std::vector<int> neighbors(int v) const { return row(v).to_vector(); }
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> degree_sequence() const;  // ascending

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    int n_;
    std::vector<BitRow> rows_;

    void check_endpoints(int u, int v) const;
};

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Relabel: vertex v of g becomes p(v) in the result.
Graph apply_permutation(const Graph& g, const Permutation& p);

// Small catalog ----------------------------------------------------------

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);   // n >= 3
Graph star_graph(int n);    // K_{1,n-1}, centre 0
Graph complete_bipartite(int a, int b);

// Line graph of K_{l,m}: vertices are the cells (r, c) of an l x m grid,
// labelled r*m + c; two cells are adjacent iff they share a row or column.
Graph grid_graph(int l, int m);

// Line graph of K_m: vertices are the 2-subsets {i, j} of {0..m-1} in
// colexicographic order; adjacent iff the pairs intersect.
Graph triangular_graph(int m);

// Lookup by catalog name ("empty", "complete", "path", "cycle", "star",
// "complete_bipartite", "grid", "triangular") with integer parameters.
Graph build_named(const std::string& name, const std::vector<int>& params);

// Validates that `set` lists distinct vertices of g; returns a sorted copy.
// Throws std::invalid_argument otherwise.
std::vector<int> check_vertex_set(const Graph& g, const std::vector<int>& set);

BitRow set_mask(int n, const std::vector<int>& set);

}  // namespace gm

#endif
