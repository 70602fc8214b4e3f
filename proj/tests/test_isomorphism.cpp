#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gm/constructions.hpp"
#include "gm/graph.hpp"
#include "gm/isomorphism.hpp"
#include "gm/switching.hpp"
#include "reference.hpp"

using namespace gm;

namespace {

Graph random_graph(std::mt19937& rng, int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1u) g.add_edge(u, v);
    return g;
}

Permutation random_permutation(std::mt19937& rng, int n) {
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i) map[i] = i;
    std::shuffle(map.begin(), map.end(), rng);
    return Permutation(std::move(map));
}

std::vector<int> image_of_set(const Permutation& p, const std::vector<int>& s) {
    std::vector<int> out;
    for (int v : s) out.push_back(p(v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("basic accept/reject") {
    CHECK_FALSE(are_isomorphic(cycle_graph(4), path_graph(4)).has_value());
    CHECK_FALSE(are_isomorphic(path_graph(3), complete_graph(3)).has_value());
    CHECK_FALSE(are_isomorphic(path_graph(3), path_graph(4)).has_value());  // order differs

    auto self = are_isomorphic(cycle_graph(5), cycle_graph(5));
    REQUIRE(self.has_value());
    CHECK(check_isomorphism(cycle_graph(5), cycle_graph(5), *self));
}

TEST_CASE("witnesses on relabelled copies") {
    std::mt19937 rng(43u);
    for (int it = 0; it < 30; ++it) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = random_graph(rng, n);
        Graph h = apply_permutation(g, random_permutation(rng, n));
        auto w = are_isomorphic(g, h);
        REQUIRE(w.has_value());
        CHECK(check_isomorphism(g, h, *w));
    }
}

TEST_CASE("the switched 4x4 rook's graph is a different graph") {
    Graph g = grid_graph(4, 4);
    Graph s = apply_switching(g, {0, 5, 10, 15});
    CHECK_FALSE(are_isomorphic(g, s).has_value());
}

TEST_CASE("m5 fixture: switch is isomorphic, witness verified") {
    auto [g, x] = m5_fixture();
    Graph s = apply_switching(g, x);
    auto w = are_isomorphic(g, s);
    REQUIRE(w.has_value());
    CHECK(check_isomorphism(g, s, *w));
    CHECK(check_isomorphism(g, s, m5_witness_permutation()));
}

TEST_CASE("set-fixing search: bipartite18 swaps the two outer layers") {
    Graph g = bipartite18();
    std::vector<int> x = bipartite18_set();
    Graph s = apply_switching(g, x);

    auto w = isomorphism_fixing_set(g, s, x);
    REQUIRE(w.has_value());
    CHECK(check_isomorphism(g, s, *w));
    CHECK(image_of_set(*w, x) == x);
    // the two 4-vertex layers must trade places
    CHECK(image_of_set(*w, {4, 5, 6, 7}) == std::vector<int>{8, 9, 10, 11});
    CHECK(image_of_set(*w, {8, 9, 10, 11}) == std::vector<int>{4, 5, 6, 7});
}

TEST_CASE("set-fixing search: example27 has no set-fixing isomorphism") {
    Graph g = example27();
    std::vector<int> x = example27_set();
    Graph s = apply_switching(g, x);
    // isomorphic at large ...
    REQUIRE(are_isomorphic(g, s).has_value());
    CHECK(check_isomorphism(g, s, example27_candidate_isomorphism()));
    // ... but not by any map that fixes the switching set
    CHECK_FALSE(isomorphism_fixing_set(g, s, x).has_value());
}

TEST_CASE("set-fixing search: m5 has no set-fixing isomorphism") {
    auto [g, x] = m5_fixture();
    Graph s = apply_switching(g, x);
    CHECK_FALSE(isomorphism_fixing_set(g, s, x).has_value());
}

TEST_CASE("set-fixing search: self-maps and errors") {
    Graph g = cycle_graph(6);
    auto w = isomorphism_fixing_set(g, g, {0, 3});
    REQUIRE(w.has_value());
    CHECK(is_automorphism(g, *w));
    CHECK(image_of_set(*w, {0, 3}) == std::vector<int>{0, 3});

    CHECK_THROWS_AS(isomorphism_fixing_set(g, g, {0, 7}), std::invalid_argument);
    CHECK_THROWS_AS(isomorphism_fixing_set(g, g, {0, 0}), std::invalid_argument);
    // order mismatch is a plain miss, not an error
    CHECK_FALSE(isomorphism_fixing_set(g, path_graph(5), {0, 1}).has_value());
}

TEST_CASE("automorphism groups of catalog graphs") {
    CHECK(automorphism_group(complete_graph(4)).order == 24);
    CHECK(automorphism_group(cycle_graph(4)).order == 8);   // dihedral
    CHECK(automorphism_group(path_graph(4)).order == 2);    // end-to-end flip
    CHECK(automorphism_group(triangular_graph(5)).order == 120);
    CHECK(automorphism_group(grid_graph(4, 4)).order == 1152);  // (4!)^2 * 2

    AutomorphismGroup e6 = automorphism_group(empty_graph(6));
    CHECK(e6.order == 720);
    CHECK(e6.orbits == std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}});
}

TEST_CASE("automorphism group of the 9-vertex gadget") {
    AutomorphismGroup aut = automorphism_group(gadget9());
    CHECK(aut.order == 3);
    // the only symmetry is the index rotation within each 3-vertex band
    for (const Permutation& p : aut.generators) CHECK(is_automorphism(gadget9(), p));
    CHECK(aut.orbits == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
}

TEST_CASE("orbit structure of the m5 base graph") {
    // Aut of the graph on m5_base_matrix() moves vertices only inside the
    // five blocked pairs
    Matrix01 b = m5_base_matrix();
    Graph h(10);
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            if (b[u][v]) h.add_edge(u, v);
    AutomorphismGroup aut = automorphism_group(h);
    CHECK(aut.orbits ==
          std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
}

TEST_CASE("orbits helper") {
    CHECK(orbits(3, {}) == std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(orbits(3, {Permutation::identity(3)}) ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(orbits(6, {Permutation::transposition(6, 0, 1), Permutation::transposition(6, 2, 3),
                     Permutation::transposition(6, 4, 5)}) ==
          std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});
    CHECK(orbits(4, {Permutation({1, 2, 3, 0})}) ==
          std::vector<std::vector<int>>{{0, 1, 2, 3}});
}

TEST_CASE("agreement with brute force on small graphs") {
    std::mt19937 rng(77123u);
    for (int it = 0; it < 25; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        Graph g = random_graph(rng, n);

        // group order matches the exhaustive count
        CHECK(automorphism_group(g).order == reference::automorphism_count_bruteforce(g));

        // positive instances: relabelled copy
        Graph h = apply_permutation(g, random_permutation(rng, n));
        auto fast = are_isomorphic(g, h);
        auto slow = reference::isomorphism_bruteforce(g, h);
        REQUIRE(fast.has_value());
        REQUIRE(slow.has_value());
        CHECK(check_isomorphism(g, h, *fast));
        CHECK(check_isomorphism(g, h, *slow));

        // perturbed instances: toggle one pair and compare verdicts
        if (n >= 2) {
            Graph h2 = h;
            int u = static_cast<int>(rng() % n), v = (u + 1) % n;
            h2.toggle_edge(u, v);
            CHECK(are_isomorphic(g, h2).has_value() ==
                  reference::isomorphism_bruteforce(g, h2).has_value());
        }
    }
}

TEST_CASE("witness checking rejects wrong maps") {
    Graph c4 = cycle_graph(4);
    CHECK(is_automorphism(c4, Permutation({1, 2, 3, 0})));
    CHECK_FALSE(is_automorphism(c4, Permutation::transposition(4, 0, 1)));
    CHECK_FALSE(check_isomorphism(c4, path_graph(4), Permutation::identity(4)));
    CHECK_FALSE(check_isomorphism(c4, c4, Permutation::transposition(4, 0, 1)));
    // degree mismatch: permutation of the wrong size
    CHECK_FALSE(check_isomorphism(c4, c4, Permutation::identity(3)));
}
