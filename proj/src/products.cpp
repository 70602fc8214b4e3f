#include "gm/products.hpp"

#include <stdexcept>

namespace gm {

ProductKind product_kind_from_string(const std::string& s) {
    if (s == "tensor") return ProductKind::Tensor;
    if (s == "strengthened") return ProductKind::Strengthened;
    throw std::invalid_argument("unknown product kind: " + s);
}

std::string product_kind_name(ProductKind kind) {
    return kind == ProductKind::Tensor ? "tensor" : "strengthened";
}

namespace {

Graph build_product(const Graph& h, const Graph& g, bool include_diagonal) {
    const int p = h.order();
    const int n = g.order();
    Graph out(p * n);
    for (int i = 0; i < p; ++i) {
        for (int j = i; j < p; ++j) {
            bool linked = (i == j) ? include_diagonal : h.adjacent(i, j);
            if (!linked) continue;
            for (int x = 0; x < n; ++x) {
                for (int y : g.neighbors(x)) {
                    if (i == j && y <= x) continue;  // emit each block-diagonal edge once
                    out.add_edge(i * n + x, j * n + y);
                }
            }
        }
    }
    return out;
}

}  // namespace

Graph tensor_product(const Graph& h, const Graph& g) { return build_product(h, g, false); }

Graph strengthened_tensor(const Graph& h, const Graph& g) { return build_product(h, g, true); }

Graph product(ProductKind kind, const Graph& h, const Graph& g) {
    return kind == ProductKind::Tensor ? tensor_product(h, g) : strengthened_tensor(h, g);
}

Graph coclique_extension(int n, const Graph& g) {
    if (n <= 0) throw std::invalid_argument("coclique extension needs n >= 1");
    return strengthened_tensor(complete_graph(n), g);
}

std::vector<int> lift_switching_set(const Graph& h, int i, const std::vector<int>& x,
                                    const Graph& g) {
    if (i < 0 || i >= h.order()) throw std::invalid_argument("lift: vertex out of range");
    std::vector<int> sorted = check_vertex_set(g, x);
    std::vector<int> out;
    out.reserve(sorted.size());
    for (int v : sorted) out.push_back(i * g.order() + v);
    return out;
}

SwitchingPartition product_switching_partition(const Graph& h, const std::vector<int>& x,
                                               const Graph& g) {
    std::vector<int> sorted = check_vertex_set(g, x);
    SwitchingPartition part;
    for (int i = 0; i < h.order(); ++i) {
        std::vector<int> cell;
        cell.reserve(sorted.size());
        for (int v : sorted) cell.push_back(i * g.order() + v);
        part.cells.push_back(std::move(cell));
    }
    return part;
}

}  // namespace gm
