#include "gm/invariants.hpp"

#include <stdexcept>

#include "gm/switching.hpp"

namespace gm {

int common_neighbors(const Graph& g, int x, int y) {
    if (x == y) return g.degree(x);
    return g.row(x).and_count(g.row(y));
}

Multiset lambda_multiset(const Graph& g, const std::vector<int>& x, LambdaScope scope) {
    std::vector<int> sorted = check_vertex_set(g, x);
    BitRow mask = set_mask(g.order(), sorted);
    std::vector<int> values;
    if (scope == LambdaScope::All) {
        for (std::size_t a = 0; a < sorted.size(); ++a) {
            values.push_back(g.degree(sorted[a]));  // lambda(x, x)
            for (std::size_t b = a + 1; b < sorted.size(); ++b)
                values.push_back(common_neighbors(g, sorted[a], sorted[b]));
        }
    }
    for (int v : sorted) {
        for (int y = 0; y < g.order(); ++y) {
            if (mask.test(y)) continue;
            values.push_back(common_neighbors(g, v, y));
        }
    }
    return Multiset(std::move(values));
}

Lemma3Report lemma3_check(const Graph& g, const std::vector<int>& x) {
    Graph switched = apply_switching(g, x);  // throws unless x is a switching set
    Lemma3Report r;

    std::vector<int> deg_before, deg_after;
    std::vector<int> sorted = check_vertex_set(g, x);
    for (int v : sorted) {
        deg_before.push_back(g.degree(v));
        deg_after.push_back(switched.degree(v));
    }
    r.x_degrees_before = Multiset(std::move(deg_before));
    r.x_degrees_after = Multiset(std::move(deg_after));
    r.cond_i = !(r.x_degrees_before == r.x_degrees_after);

    r.lambda_before = lambda_multiset(g, x, LambdaScope::All);
    r.lambda_after = lambda_multiset(switched, x, LambdaScope::All);
    r.cond_ii = !(r.lambda_before == r.lambda_after);

    r.lambda_bar_before = lambda_multiset(g, x, LambdaScope::Complement);
    r.lambda_bar_after = lambda_multiset(switched, x, LambdaScope::Complement);
    r.same_degree_on_x = true;
    for (int v : sorted)
        if (g.degree(v) != g.degree(sorted[0])) r.same_degree_on_x = false;
    r.cond_iii = r.same_degree_on_x && !(r.lambda_bar_before == r.lambda_bar_after);
    return r;
}

int retained_neighbor_count(const Graph& g, const std::vector<int>& x, int v) {
    std::vector<int> sorted = check_vertex_set(g, x);
    bool member = false;
    for (int u : sorted) member = member || u == v;
    if (!member) throw std::invalid_argument("retained_neighbor_count: vertex not in X");
    Graph switched = apply_switching(g, x);
    return g.row(v).and_count(switched.row(v));
}

bool has_complementary_rows(const Matrix01& m) {
    const std::size_t rows = m.size();
    if (rows < 2) return false;
    for (std::size_t a = 0; a < rows; ++a)
        if (m[a].size() != m[0].size())
            throw std::invalid_argument("has_complementary_rows: ragged matrix");
    for (std::size_t a = 0; a < rows; ++a) {
        for (std::size_t b = a + 1; b < rows; ++b) {
            bool complementary = true;
            for (std::size_t c = 0; c < m[a].size(); ++c) {
                if (m[a][c] + m[b][c] != 1) {
                    complementary = false;
                    break;
                }
            }
            if (complementary) return true;
        }
    }
    return false;
}

Theorem4Report theorem4_hypothesis(const Graph& g, const std::vector<int>& x, const Graph& h,
                                   int i) {
    if (i < 0 || i >= h.order()) throw std::invalid_argument("theorem4: vertex out of range");
    BlockDecomposition blocks = block_decomposition(g, x);  // throws unless x is a switching set
    Lemma3Report lemma = lemma3_check(g, x);

    Theorem4Report r;
    r.same_degree_on_x = lemma.same_degree_on_x;
    r.lambda_bar_invariant = lemma.lambda_bar_before == lemma.lambda_bar_after;

    const std::size_t sz = blocks.x.size();
    bool b_empty = true;
    bool b_halfregular = true;
    for (std::size_t a = 0; a < sz; ++a) {
        std::size_t row_sum = 0;
        for (std::size_t b = 0; b < sz; ++b) row_sum += blocks.b[a][b];
        if (row_sum != 0) b_empty = false;
        if (2 * row_sum != sz) b_halfregular = false;
    }

    r.case_coclique = b_empty && blocks.n.size() == sz && !blocks.n.empty() &&
                      blocks.n[0].size() >= 2 && !has_complementary_rows(blocks.n);

    if (b_halfregular) {
        // Rows of [B N]: each has weight (|X| + #half)/2, so two rows are
        // complementary exactly when they are disjoint, and a disjoint pair
        // would let the maximal mixed common-neighbor value reappear after
        // switching the product.
        Matrix01 concat(sz);
        for (std::size_t a = 0; a < sz; ++a) {
            concat[a] = blocks.b[a];
            concat[a].insert(concat[a].end(), blocks.n[a].begin(), blocks.n[a].end());
        }
        r.case_halfregular = !has_complementary_rows(concat);
    }

    r.vertex_condition_strengthened = h.degree(i) >= 1;
    for (int j : h.neighbors(i))
        if (h.degree(j) >= 2) r.vertex_condition_tensor = true;
    return r;
}

}  // namespace gm
