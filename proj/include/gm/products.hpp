#ifndef GM_PRODUCTS_HPP
#define GM_PRODUCTS_HPP

#include <string>
#include <vector>

#include "gm/graph.hpp"
#include "gm/switching.hpp"

namespace gm {

enum class ProductKind { Tensor, Strengthened };

ProductKind product_kind_from_string(const std::string& s);  // "tensor" | "strengthened"
std::string product_kind_name(ProductKind kind);

// Vertex (i, x) of a product of h (order p) and g (order n) gets label i*n + x.

// Adjacency matrix E (x) A: (i,x) ~ (j,y)  iff  i~j in h and x~y in g.
Graph tensor_product(const Graph& h, const Graph& g);

// Adjacency matrix (E+I) (x) A: (i,x) ~ (j,y)  iff  (i~j or i==j) and x~y.
Graph strengthened_tensor(const Graph& h, const Graph& g);

Graph product(ProductKind kind, const Graph& h, const Graph& g);

// Each vertex of g replaced by a coclique of size n; equals the strengthened
// tensor of the complete graph on n vertices with g.
Graph coclique_extension(int n, const Graph& g);

// Labels of {i} x X inside the product of h and g (ascending).
std::vector<int> lift_switching_set(const Graph& h, int i, const std::vector<int>& x,
                                    const Graph& g);

// The cells {0} x X, ..., {p-1} x X as one switching partition of the product.
// Valid in the product whenever X is a switching set of g.
SwitchingPartition product_switching_partition(const Graph& h, const std::vector<int>& x,
                                               const Graph& g);

}  // namespace gm

#endif
