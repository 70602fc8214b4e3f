#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "gm/graph.hpp"
#include "gm/invariants.hpp"
#include "gm/isomorphism.hpp"
#include "gm/products.hpp"
#include "gm/spectrum.hpp"
#include "gm/switching.hpp"

using namespace gm;

namespace {

Graph random_graph(std::mt19937& rng, int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1u) g.add_edge(u, v);
    return g;
}

// closed neighbourhood in h when the product keeps the diagonal blocks
int factor_weight(ProductKind kind, const Graph& h, int i, int j) {
    if (i == j) return kind == ProductKind::Strengthened ? 1 : 0;
    return h.adjacent(i, j) ? 1 : 0;
}

}  // namespace

TEST_CASE("tensor product basics") {
    // K2 x K2 is a perfect matching: (0,0)~(1,1) and (0,1)~(1,0)
    Graph t = tensor_product(complete_graph(2), complete_graph(2));
    CHECK(t == graph_from_edges(4, {{0, 3}, {1, 2}}));

    // order and degree law: deg(i,x) = deg_h(i) * deg_g(x)
    std::mt19937 rng(608u);
    for (int it = 0; it < 10; ++it) {
        Graph h = random_graph(rng, 2 + static_cast<int>(rng() % 3));
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 5));
        Graph p = tensor_product(h, g);
        REQUIRE(p.order() == h.order() * g.order());
        for (int i = 0; i < h.order(); ++i)
            for (int x = 0; x < g.order(); ++x)
                CHECK(p.degree(i * g.order() + x) == h.degree(i) * g.degree(x));
    }

    Graph p = tensor_product(path_graph(3), grid_graph(3, 2));
    CHECK(p.order() == 18);
    CHECK(p.edge_count() == 36);  // 2 factor edges x 9 base edges x 2 orientations
}

TEST_CASE("strengthened tensor basics") {
    // a single-vertex factor changes nothing
    std::mt19937 rng(92u);
    for (int it = 0; it < 5; ++it) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 5));
        CHECK(strengthened_tensor(complete_graph(1), g) == g);
    }

    // K2 with K2 gives the 4-cycle; K2 with C4 gives K_{4,4}
    CHECK(are_isomorphic(strengthened_tensor(complete_graph(2), complete_graph(2)),
                         cycle_graph(4))
              .has_value());
    CHECK(are_isomorphic(strengthened_tensor(complete_graph(2), cycle_graph(4)),
                         complete_bipartite(4, 4))
              .has_value());

    // degree law: deg(i,x) = (deg_h(i) + 1) * deg_g(x)
    for (int it = 0; it < 10; ++it) {
        Graph h = random_graph(rng, 2 + static_cast<int>(rng() % 3));
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 5));
        Graph p = strengthened_tensor(h, g);
        for (int i = 0; i < h.order(); ++i)
            for (int x = 0; x < g.order(); ++x)
                CHECK(p.degree(i * g.order() + x) == (h.degree(i) + 1) * g.degree(x));
    }
}

TEST_CASE("adjacency rule, exhaustively") {
    std::mt19937 rng(3141u);
    Graph h = random_graph(rng, 3);
    Graph g = random_graph(rng, 5);
    for (ProductKind kind : {ProductKind::Tensor, ProductKind::Strengthened}) {
        Graph p = product(kind, h, g);
        for (int i = 0; i < 3; ++i)
            for (int x = 0; x < 5; ++x)
                for (int j = 0; j < 3; ++j)
                    for (int y = 0; y < 5; ++y) {
                        bool expect = factor_weight(kind, h, i, j) == 1 && g.adjacent(x, y);
                        CHECK(p.adjacent(i * 5 + x, j * 5 + y) == expect);
                    }
    }
}

TEST_CASE("coclique extension") {
    std::mt19937 rng(271u);
    Graph g = random_graph(rng, 6);
    CHECK(coclique_extension(1, g) == g);
    CHECK(coclique_extension(2, g) == strengthened_tensor(complete_graph(2), g));
    CHECK(are_isomorphic(coclique_extension(2, cycle_graph(4)), complete_bipartite(4, 4))
              .has_value());

    // blowing up a triangle gives the complete tripartite graph K(4,4,4):
    // 12 vertices, 8-regular, independent 4-sets
    Graph k444 = coclique_extension(4, complete_graph(3));
    CHECK(k444.order() == 12);
    for (int v = 0; v < 12; ++v) CHECK(k444.degree(v) == 8);
    CHECK(k444 == strengthened_tensor(complete_graph(4), complete_graph(3)));

    CHECK_THROWS_AS(coclique_extension(0, g), std::invalid_argument);
}

TEST_CASE("product kind helpers") {
    CHECK(product_kind_from_string("tensor") == ProductKind::Tensor);
    CHECK(product_kind_from_string("strengthened") == ProductKind::Strengthened);
    CHECK(product_kind_name(ProductKind::Tensor) == "tensor");
    CHECK(product_kind_name(ProductKind::Strengthened) == "strengthened");
    CHECK_THROWS_AS(product_kind_from_string("cartesian"), std::invalid_argument);

    std::mt19937 rng(5u);
    Graph h = random_graph(rng, 3), g = random_graph(rng, 4);
    CHECK(product(ProductKind::Tensor, h, g) == tensor_product(h, g));
    CHECK(product(ProductKind::Strengthened, h, g) == strengthened_tensor(h, g));
}

TEST_CASE("lifting a switching set into a product") {
    Graph g = grid_graph(3, 2);
    Graph h = path_graph(3);
    std::vector<int> x = {0, 1, 2, 3};

    CHECK(lift_switching_set(h, 0, x, g) == std::vector<int>{0, 1, 2, 3});
    CHECK(lift_switching_set(h, 1, x, g) == std::vector<int>{6, 7, 8, 9});
    CHECK(lift_switching_set(h, 2, x, g) == std::vector<int>{12, 13, 14, 15});

    // the lifted copy is a switching set of both products
    for (ProductKind kind : {ProductKind::Tensor, ProductKind::Strengthened}) {
        Graph p = product(kind, h, g);
        for (int i = 0; i < 3; ++i) CHECK(is_switching_set(p, lift_switching_set(h, i, x, g)));
    }

    CHECK_THROWS_AS(lift_switching_set(h, 3, x, g), std::invalid_argument);   // no such layer
    CHECK_THROWS_AS(lift_switching_set(h, 0, {0, 9}, g), std::invalid_argument);
}

TEST_CASE("lifting the whole partition") {
    Graph g = grid_graph(3, 2);
    std::vector<int> x = {0, 1, 2, 3};

    SwitchingPartition single = product_switching_partition(complete_graph(1), x, g);
    CHECK(single.cells == std::vector<std::vector<int>>{{0, 1, 2, 3}});

    SwitchingPartition triple = product_switching_partition(path_graph(3), x, g);
    CHECK(triple.cells == std::vector<std::vector<int>>{{0, 1, 2, 3}, {6, 7, 8, 9}, {12, 13, 14, 15}});

    for (ProductKind kind : {ProductKind::Tensor, ProductKind::Strengthened}) {
        Graph p = product(kind, path_graph(3), g);
        CHECK(is_switching_partition(p, triple));
    }
}

TEST_CASE("switching commutes with taking products") {
    // switching every lifted cell in the product equals the product of the
    // switched base graph
    auto commutation = [](ProductKind kind, const Graph& h, const Graph& g,
                          const std::vector<int>& x) {
        Graph p = product(kind, h, g);
        SwitchingPartition cells = product_switching_partition(h, x, g);
        Graph left = apply_switching(p, cells);
        Graph right = product(kind, h, apply_switching(g, x));
        CHECK(left == right);
    };

    for (ProductKind kind : {ProductKind::Tensor, ProductKind::Strengthened}) {
        commutation(kind, path_graph(3), grid_graph(3, 2), {0, 1, 2, 3});
        commutation(kind, complete_graph(2), triangular_graph(5), {0, 1, 4, 5});
        commutation(kind, cycle_graph(4), grid_graph(4, 4), {0, 5, 10, 15});
    }

    std::mt19937 rng(7331u);
    int done = 0;
    while (done < 20) {
        Graph h = random_graph(rng, 2 + static_cast<int>(rng() % 3));
        Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 4));
        auto sets = enumerate_switching_sets(g, 4);
        if (sets.empty()) continue;
        for (ProductKind kind : {ProductKind::Tensor, ProductKind::Strengthened})
            commutation(kind, h, g, sets.front());
        ++done;
    }
}

TEST_CASE("common neighbours in a product factor through both coordinates") {
    // lambda_p((i,x),(j,y)) = (sum over common factor neighbours) * lambda_g(x,y)
    // where the strengthened product counts the diagonal as a neighbour
    std::mt19937 rng(420u);
    for (int it = 0; it < 8; ++it) {
        Graph h = random_graph(rng, 2 + static_cast<int>(rng() % 3));
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 4));
        int n = g.order();
        for (ProductKind kind : {ProductKind::Tensor, ProductKind::Strengthened}) {
            Graph p = product(kind, h, g);
            for (int i = 0; i < h.order(); ++i)
                for (int j = 0; j < h.order(); ++j)
                    for (int x = 0; x < n; ++x)
                        for (int y = 0; y < n; ++y) {
                            if (i == j && x == y) continue;
                            int factor = 0;
                            for (int k = 0; k < h.order(); ++k)
                                factor += factor_weight(kind, h, i, k) *
                                          factor_weight(kind, h, j, k);
                            int base = common_neighbors(g, x, y);
                            if (x == y) base = g.degree(x);
                            CHECK(common_neighbors(p, i * n + x, j * n + y) == factor * base);
                        }
        }
    }
}

TEST_CASE("pinned witness pairs for the product construction") {
    // boundary cases: the hypothesis fails and the switched product really is
    // isomorphic to the product
    {
        Graph g = triangular_graph(4);
        Graph p = strengthened_tensor(complete_graph(2), g);  // = K(4,4,4)
        Graph s = apply_switching(p, lift_switching_set(complete_graph(2), 0, {0, 1, 4, 5}, g));
        CHECK(are_isomorphic(p, s).has_value());
    }
    {
        Graph g = grid_graph(3, 2);
        Graph p = tensor_product(path_graph(3), g);
        Graph s = apply_switching(p, lift_switching_set(path_graph(3), 0, {0, 1, 2, 3}, g));
        CHECK(are_isomorphic(p, s).has_value());
    }

    // satisfied instances: cospectral but not isomorphic
    {
        Graph g = grid_graph(4, 3);
        REQUIRE(theorem4_hypothesis(g, {0, 1, 3, 4}, path_graph(3), 0)
                    .hypothesis_satisfied(ProductKind::Tensor));
        Graph p = tensor_product(path_graph(3), g);
        Graph s = apply_switching(p, lift_switching_set(path_graph(3), 0, {0, 1, 3, 4}, g));
        CHECK(cospectral(p, s));
        CHECK_FALSE(are_isomorphic(p, s).has_value());
    }
    {
        Graph g = triangular_graph(5);
        REQUIRE(theorem4_hypothesis(g, {0, 1, 4, 5}, complete_graph(2), 0)
                    .hypothesis_satisfied(ProductKind::Strengthened));
        Graph p = strengthened_tensor(complete_graph(2), g);
        Graph s = apply_switching(p, lift_switching_set(complete_graph(2), 0, {0, 1, 4, 5}, g));
        CHECK(cospectral(p, s));
        CHECK_FALSE(are_isomorphic(p, s).has_value());
    }
}
