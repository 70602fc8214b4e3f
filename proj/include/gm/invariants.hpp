#ifndef GM_INVARIANTS_HPP
#define GM_INVARIANTS_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gm/graph.hpp"
#include "gm/products.hpp"

namespace gm {

using Matrix01 = std::vector<std::vector<uint8_t>>;

// Number of common neighbours lambda(x, y); by convention lambda(x, x) is
// the degree of x.
int common_neighbors(const Graph& g, int x, int y);

struct Multiset {
    std::vector<int> values;  // kept sorted
    Multiset() = default;
    explicit Multiset(std::vector<int> v) : values(std::move(v)) {
        std::sort(values.begin(), values.end());
    }
    bool operator==(const Multiset&) const = default;
};

enum class LambdaScope {
    All,        // lambda(x,x) for x in X, unordered pairs inside X, and X-to-outside pairs
    Complement  // only pairs x in X, y outside X
};

Multiset lambda_multiset(const Graph& g, const std::vector<int>& x, LambdaScope scope);

// Sufficient conditions for a switch on X to change the isomorphism class:
//   cond_i   — the multiset of (whole-graph) degrees over X changes,
//   cond_ii  — the common-neighbour multiset over X-anchored pairs changes,
//   cond_iii — all X degrees are equal and the X-to-outside multiset changes.
// Any true condition certifies the switched graph is non-isomorphic.
struct Lemma3Report {
    bool cond_i = false;
    bool cond_ii = false;
    bool cond_iii = false;
    bool same_degree_on_x = false;
    Multiset x_degrees_before, x_degrees_after;
    Multiset lambda_before, lambda_after;
    Multiset lambda_bar_before, lambda_bar_after;

    bool any() const { return cond_i || cond_ii || cond_iii; }
};

// Pre: x is a switching set of g (throws otherwise).
Lemma3Report lemma3_check(const Graph& g, const std::vector<int>& x);

// mu(v) = number of neighbours of v that remain neighbours after switching
// on x.  Pre: v is a member of x.
int retained_neighbor_count(const Graph& g, const std::vector<int>& x, int v);

// Two rows summing to the all-one row (vacuously true for a pair of
// zero-width rows).  Throws on ragged input.
bool has_complementary_rows(const Matrix01& m);

// Hypothesis check for the product construction on (g, X) lifted into a
// product with factor h at vertex i.  Both per-kind vertex conditions are
// reported; select with hypothesis_satisfied().
struct Theorem4Report {
    bool same_degree_on_x = false;
    bool lambda_bar_invariant = false;
    bool case_coclique = false;      // B = O, N has >= 2 columns, no complementary N rows
    bool case_halfregular = false;   // B row sums |X|/2, no complementary rows of [B N]
    bool vertex_condition_tensor = false;        // i has a neighbour of degree >= 2
    bool vertex_condition_strengthened = false;  // deg(i) >= 1

    bool hypothesis_satisfied(ProductKind kind) const {
        bool vc = (kind == ProductKind::Tensor) ? vertex_condition_tensor
                                                : vertex_condition_strengthened;
        return same_degree_on_x && lambda_bar_invariant && (case_coclique || case_halfregular) && vc;
    }
};

// Pre: x is a switching set of g; i is a vertex of h.
Theorem4Report theorem4_hypothesis(const Graph& g, const std::vector<int>& x, const Graph& h,
                                   int i);

}  // namespace gm

#endif
