#ifndef GM_CONSTRUCTIONS_HPP
#define GM_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gm/graph.hpp"
#include "gm/invariants.hpp"
#include "gm/permutation.hpp"

namespace gm {

// 0/1 matrix T with T + T^T = J - I.
struct TournamentMatrix {
    int m = 0;
    Matrix01 entries;
};

bool is_tournament(const TournamentMatrix& t);
bool is_regular_tournament(const TournamentMatrix& t);  // constant row sums (m-1)/2

// i beats i+1, ..., i+(m-1)/2 (mod m); m odd and positive.
TournamentMatrix cyclic_tournament(int m);

// Hypothesis check for the B matrices usable in the tournament construction:
// B is the adjacency matrix of a graph H on 2m vertices such that, with
// rho = (0 1)(2 3)...(2m-2 2m-1),
//   (a) rho is an automorphism of H,
//   (b) rho is a fixed-point-free involution (true by construction; recorded),
//   (c) the orbits of Aut(H) are exactly the pairs {2i, 2i+1},
//   (d) H is regular.
struct Prop4Report {
    bool rho_is_automorphism = false;
    bool rho_fixed_point_free_involution = false;
    bool aut_orbits_are_pairs = false;
    bool regular = false;

    bool all() const {
        return rho_is_automorphism && rho_fixed_point_free_involution && aut_orbits_are_pairs &&
               regular;
    }
};

// Throws if b is not square of even positive order, symmetric, 0/1 with zero
// diagonal.
Prop4Report verify_prop4_hypothesis(const Matrix01& b);

// A = [[B, N], [N^T, B]] with N = T (x) J_2 + I, where T is a regular
// tournament of order m and B has order 2m.  Returns the graph together with
// the switching set X = {0, ..., 2m-1}; throws if the inputs do not match or
// X fails to be a switching set.
std::pair<Graph, std::vector<int>> prop4_graph(const Matrix01& b, const TournamentMatrix& t);

// The order-10 base matrix used by the m = 5 instance: 2x2 blocks
//   [Z O Z O J]
//   [O Z J Z O]
//   [Z J O Z O]
//   [O Z Z O J]
//   [J O O J O]
// with Z = J_2 - I_2.
Matrix01 m5_base_matrix();

// 20-vertex 9-regular instance built from m5_base_matrix() and the cyclic
// tournament of order 5, with switching set {0..9}.
std::pair<Graph, std::vector<int>> m5_fixture();

// Maps the fixture onto its switched graph: j -> 10 + (j xor 1) for j < 10
// and 10 + i -> i.  No isomorphism fixes the switching set pointwise as a set.
Permutation m5_witness_permutation();

// 18-vertex bipartite-flavoured fixture: X = {0..3} ("a..d"), two more
// 4-vertex layers {4..7}, {8..11}, and six vertices u_0..u_5 = {12..17}, each
// u adjacent to two vertices of each layer.  X is a switching set; the switch
// is an isomorphism that cannot fix X pointwise-as-a-set without swapping the
// other two layers.
Graph bipartite18();
std::vector<int> bipartite18_set();  // {0,1,2,3}
Permutation bipartite18_candidate_isomorphism();

// For the four vertices layer_start..layer_start+3, the ascending u-indices
// (vertex 12+i -> i) adjacent to each; pins the incidence structure in tests.
std::vector<std::vector<int>> bipartite18_u_triples(const Graph& g, int layer_start);

// 9-vertex gadget with automorphism group of order 3 (a cyclic rotation).
// Vertices a_i = i, b_i = 3+i, c_i = 6+i; degrees 2, 5, 3.
Graph gadget9();

// bipartite18 with the gadget appended at 18..26 and a_i joined to layer i.
// The graph and its switch are isomorphic, but no isomorphism fixes {0..3}.
Graph example27();
std::vector<int> example27_set();  // {0,1,2,3}
Permutation example27_candidate_isomorphism();

struct Fixture {
    std::string name;
    Graph graph;
    std::optional<std::vector<int>> set;  // canonical switching set, when one is bundled
};

// "m5" | "bipartite18" | "gadget9" | "example27" | "grid:L,M" | "triangular:M"
Fixture fixture_by_name(const std::string& spec);

}  // namespace gm

#endif
