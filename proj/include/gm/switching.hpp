#ifndef GM_SWITCHING_HPP
#define GM_SWITCHING_HPP

#include <cstdint>
#include <vector>

#include "gm/graph.hpp"

namespace gm {

// A candidate switching partition {X_1, ..., X_l}; the set Y of vertices not
// covered by any cell is implicit.  Cells must be nonempty and disjoint.
struct SwitchingPartition {
    std::vector<std::vector<int>> cells;

    static SwitchingPartition single(std::vector<int> x) { return {{std::move(x)}}; }
};

enum class YClass : uint8_t { Zero, Half, Full, Invalid };

const char* y_class_name(YClass c);

// Outcome of checking the switching conditions:
//  - every vertex of X_i must see a constant number of vertices of X_j
//    (cell_degrees[i][j]; -1 when the counts differ, which invalidates), and
//  - every vertex of Y must see 0, |X_i|/2 or |X_i| vertices of X_i.
struct ValidationReport {
    bool valid = false;
    std::vector<std::vector<int>> cells;         // sorted copies
    std::vector<std::vector<int>> cell_degrees;  // l x l, -1 = not constant
    std::vector<int> y_vertices;                 // ascending
    std::vector<std::vector<YClass>> y_classes;  // |Y| x l
};

// Structural cell/partition errors (overlap, empty cell, bad vertex) throw
// std::invalid_argument; a partition that merely fails the switching
// conditions comes back with valid = false.
ValidationReport validate_partition(const Graph& g, const SwitchingPartition& p);

bool is_switching_partition(const Graph& g, const SwitchingPartition& p);
bool is_switching_set(const Graph& g, const std::vector<int>& x);

// Complements the Y-to-cell adjacency for every Y vertex in class Half.
// Pre: the partition validates; throws std::invalid_argument otherwise.
Graph apply_switching(const Graph& g, const SwitchingPartition& p);
Graph apply_switching(const Graph& g, const std::vector<int>& x);

// A = [[B, M],[M^T, C]] with the X rows first; M's columns regrouped as
// [N J O] by Y class.  Rows of `b` and `n` are indexed by sorted X.
struct BlockDecomposition {
    std::vector<int> x;                         // sorted
    std::vector<std::vector<uint8_t>> b;        // |X| x |X|
    std::vector<int> half_vertices;             // ascending
    std::vector<int> full_vertices;
    std::vector<int> zero_vertices;
    std::vector<std::vector<uint8_t>> n;        // |X| x |half|
    int cell_degree = 0;                        // row sum of B
};

// Pre: x is a valid single switching set of g.
BlockDecomposition block_decomposition(const Graph& g, const std::vector<int>& x);

// Rebuilds the graph from a decomposition (test helper / sanity check).
Graph reassemble(const Graph& g, const BlockDecomposition& d);

// All switching sets of the given size, in lexicographic order.
// Pre: size >= 2.  Optionally restrict to independent sets.
std::vector<std::vector<int>> enumerate_switching_sets(const Graph& g, int size,
                                                       bool cocliques_only = false);

}  // namespace gm

#endif
