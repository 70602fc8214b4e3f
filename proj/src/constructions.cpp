#include "gm/constructions.hpp"

#include <sstream>
#include <stdexcept>

#include "gm/isomorphism.hpp"
#include "gm/switching.hpp"

namespace gm {

bool is_tournament(const TournamentMatrix& t) {
    if (t.m <= 0 || static_cast<int>(t.entries.size()) != t.m) return false;
    for (const auto& row : t.entries)
        if (static_cast<int>(row.size()) != t.m) return false;
    for (int i = 0; i < t.m; ++i) {
        for (int j = 0; j < t.m; ++j) {
            if (t.entries[i][j] > 1) return false;
            int want = (i == j) ? 0 : 1;
            if (t.entries[i][j] + t.entries[j][i] != want) return false;
        }
    }
    return true;
}

bool is_regular_tournament(const TournamentMatrix& t) {
    if (!is_tournament(t)) return false;
    for (int i = 0; i < t.m; ++i) {
        int sum = 0;
        for (int j = 0; j < t.m; ++j) sum += t.entries[i][j];
        if (2 * sum != t.m - 1) return false;
    }
    return true;
}

TournamentMatrix cyclic_tournament(int m) {
    if (m <= 0 || m % 2 == 0) throw std::invalid_argument("cyclic tournament needs odd m >= 1");
    TournamentMatrix t;
    t.m = m;
    t.entries.assign(m, std::vector<uint8_t>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int d = 1; d <= (m - 1) / 2; ++d) t.entries[i][(i + d) % m] = 1;
    return t;
}

namespace {

// Structural checks shared by verify_prop4_hypothesis and prop4_graph.
int check_b_matrix(const Matrix01& b) {
    const int order = static_cast<int>(b.size());
    if (order <= 0 || order % 2 != 0)
        throw std::invalid_argument("B must have even positive order");
    for (const auto& row : b)
        if (static_cast<int>(row.size()) != order)
            throw std::invalid_argument("B must be square");
    for (int i = 0; i < order; ++i) {
        if (b[i][i] != 0) throw std::invalid_argument("B must have zero diagonal");
        for (int j = 0; j < order; ++j) {
            if (b[i][j] > 1) throw std::invalid_argument("B entries must be 0/1");
            if (b[i][j] != b[j][i]) throw std::invalid_argument("B must be symmetric");
        }
    }
    return order / 2;
}

Graph graph_from_matrix(const Matrix01& b) {
    Graph g(static_cast<int>(b.size()));
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (b[i][j]) g.add_edge(i, j);
    return g;
}

}  // namespace

Prop4Report verify_prop4_hypothesis(const Matrix01& b) {
    const int m = check_b_matrix(b);
    const int order = 2 * m;
    Graph h = graph_from_matrix(b);

    std::vector<int> rho(order);
    for (int i = 0; i < order; ++i) rho[i] = i ^ 1;
    Permutation p(rho);

    Prop4Report r;
    r.rho_is_automorphism = is_automorphism(h, p);
    bool fpf = true;
    for (int i = 0; i < order; ++i)
        if (p(i) == i) fpf = false;
    r.rho_fixed_point_free_involution = fpf && p.compose(p).is_identity();

    AutomorphismGroup aut = automorphism_group(h);
    std::vector<std::vector<int>> pairs;
    for (int i = 0; i < m; ++i) pairs.push_back({2 * i, 2 * i + 1});
    r.aut_orbits_are_pairs = aut.orbits == pairs;

    r.regular = true;
    for (int i = 0; i < order; ++i)
        if (h.degree(i) != h.degree(0)) r.regular = false;
    return r;
}

std::pair<Graph, std::vector<int>> prop4_graph(const Matrix01& b, const TournamentMatrix& t) {
    if (!is_regular_tournament(t))
        throw std::invalid_argument("prop4_graph needs a regular tournament");
    const int m = check_b_matrix(b);
    if (m != t.m) throw std::invalid_argument("B must have order 2m for a tournament of order m");
    const int half = 2 * m;

    // N = T (x) J_2 + I
    Matrix01 n(half, std::vector<uint8_t>(half, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (t.entries[i][j])
                for (int r = 0; r < 2; ++r)
                    for (int c = 0; c < 2; ++c) n[2 * i + r][2 * j + c] = 1;
    for (int k = 0; k < half; ++k) n[k][k] = 1;

    Graph g(2 * half);
    for (int i = 0; i < half; ++i)
        for (int j = i + 1; j < half; ++j)
            if (b[i][j]) {
                g.add_edge(i, j);              // block B on X
                g.add_edge(half + i, half + j);  // block B on the second copy
            }
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j)
            if (n[i][j]) g.add_edge(i, half + j);

    std::vector<int> x(half);
    for (int i = 0; i < half; ++i) x[i] = i;
    if (!is_switching_set(g, x))
        throw std::invalid_argument("prop4_graph: X = {0..2m-1} is not a switching set (B must be regular)");
    return {std::move(g), std::move(x)};
}

Matrix01 m5_base_matrix() {
    static const char* pattern[5] = {"ZOZOJ", "OZJZO", "ZJOZO", "OZZOJ", "JOOJO"};
    Matrix01 b(10, std::vector<uint8_t>(10, 0));
    for (int br = 0; br < 5; ++br) {
        for (int bc = 0; bc < 5; ++bc) {
            char sym = pattern[br][bc];
            for (int r = 0; r < 2; ++r) {
                for (int c = 0; c < 2; ++c) {
                    uint8_t v = 0;
                    if (sym == 'J') v = 1;
                    else if (sym == 'Z') v = (r != c) ? 1 : 0;
                    b[2 * br + r][2 * bc + c] = v;
                }
            }
        }
    }
    return b;
}

std::pair<Graph, std::vector<int>> m5_fixture() {
    return prop4_graph(m5_base_matrix(), cyclic_tournament(5));
}

Permutation m5_witness_permutation() {
    std::vector<int> map(20);
    for (int j = 0; j < 10; ++j) map[j] = 10 + (j ^ 1);
    for (int i = 0; i < 10; ++i) map[10 + i] = i;
    return Permutation(map);
}

Graph bipartite18() {
    // Layers: 0..3, 4..7 ("primed"), 8..11 ("double-primed"); u_0..u_5 = 12..17.
    static const int u_rows[6][6] = {
        {0, 1, 4, 6, 8, 11},   // u0
        {1, 2, 4, 5, 8, 10},   // u1
        {1, 3, 5, 6, 8, 9},    // u2
        {2, 3, 5, 7, 9, 10},   // u3
        {0, 3, 6, 7, 9, 11},   // u4
        {0, 2, 4, 7, 10, 11},  // u5
    };
    Graph g(18);
    for (int i = 0; i < 6; ++i)
        for (int v : u_rows[i]) g.add_edge(12 + i, v);
    return g;
}

std::vector<int> bipartite18_set() { return {0, 1, 2, 3}; }

Permutation bipartite18_candidate_isomorphism() {
    std::vector<int> map(18);
    for (int v = 0; v < 12; ++v) map[v] = (v + 4) % 12;  // layer -> next layer
    for (int i = 0; i < 6; ++i) map[12 + i] = 12 + (i + 1) % 6;
    return Permutation(map);
}

std::vector<std::vector<int>> bipartite18_u_triples(const Graph& g, int layer_start) {
    if (g.order() != 18 || layer_start < 0 || layer_start > 8)
        throw std::invalid_argument("u_triples expects an 18-vertex fixture layer");
    std::vector<std::vector<int>> out;
    for (int v = layer_start; v < layer_start + 4; ++v) {
        std::vector<int> triple;
        for (int i = 0; i < 6; ++i)
            if (g.adjacent(v, 12 + i)) triple.push_back(i);
        out.push_back(std::move(triple));
    }
    return out;
}

Graph gadget9() {
    // a_i = i, b_i = 3+i, c_i = 6+i (indices mod 3)
    Graph g(9);
    for (int i = 0; i < 3; ++i) {
        int a = i, b = 3 + i, c = 6 + i;
        int b_next = 3 + (i + 1) % 3;
        int c_prev = 6 + (i + 2) % 3;
        g.add_edge(a, b);
        g.add_edge(a, c_prev);
        g.add_edge(b, c);
        g.add_edge(b, b_next);
        g.add_edge(b, c_prev);
    }
    return g;
}

Graph example27() {
    Graph base = bipartite18();
    Graph g(27);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    Graph gadget = gadget9();
    for (auto [u, v] : gadget.edges()) g.add_edge(18 + u, 18 + v);
    for (int layer = 0; layer < 3; ++layer)
        for (int k = 0; k < 4; ++k) g.add_edge(18 + layer, 4 * layer + k);
    return g;
}

std::vector<int> example27_set() { return {0, 1, 2, 3}; }

Permutation example27_candidate_isomorphism() {
    Permutation base = bipartite18_candidate_isomorphism();
    std::vector<int> map(27);
    for (int v = 0; v < 18; ++v) map[v] = base(v);
    for (int letter = 0; letter < 3; ++letter)
        for (int i = 0; i < 3; ++i) map[18 + 3 * letter + i] = 18 + 3 * letter + (i + 1) % 3;
    return Permutation(map);
}

Fixture fixture_by_name(const std::string& spec) {
    std::string base = spec;
    std::string params;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        base = spec.substr(0, pos);
        params = spec.substr(pos + 1);
    }
    auto parse_ints = [&](std::size_t want) {
        std::vector<int> out;
        std::stringstream ss(params);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
        if (out.size() != want)
            throw std::invalid_argument("fixture " + base + " expects " + std::to_string(want) +
                                        " parameter(s)");
        return out;
    };
    if (base == "m5") {
        auto [g, x] = m5_fixture();
        return {spec, std::move(g), std::move(x)};
    }
    if (base == "bipartite18") return {spec, bipartite18(), bipartite18_set()};
    if (base == "gadget9") return {spec, gadget9(), std::nullopt};
    if (base == "example27") return {spec, example27(), example27_set()};
    if (base == "grid") {
        auto p = parse_ints(2);
        return {spec, grid_graph(p[0], p[1]), std::nullopt};
    }
    if (base == "triangular") {
        auto p = parse_ints(1);
        return {spec, triangular_graph(p[0]), std::nullopt};
    }
    throw std::invalid_argument("unknown fixture: " + spec);
}

}  // namespace gm
