#ifndef GM_ISOMORPHISM_HPP
#define GM_ISOMORPHISM_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "gm/graph.hpp"
#include "gm/permutation.hpp"

namespace gm {

// Complete search: colour refinement plus depth-first individualization.
// Deterministic: the branch vertex is the lowest-labelled vertex of the
// first smallest non-singleton colour class, images are tried in ascending
// label order, and the first witness found is returned.
std::optional<Permutation> are_isomorphic(const Graph& g, const Graph& h);

// Isomorphisms p with p(X) = X setwise (X read in both graphs under the
// shared labelling).  Implemented by seeding the refinement with the
// two-colouring {X, V \ X}.
std::optional<Permutation> isomorphism_fixing_set(const Graph& g, const Graph& h,
                                                 const std::vector<int>& x);

struct AutomorphismGroup {
    std::vector<Permutation> generators;
    mpz_class order;                       // exact
    std::vector<std::vector<int>> orbits;  // cells sorted, ordered by minimum
};

// Stabilizer-chain construction with base 0, 1, ..., n-1: at level i the
// orbit of i under the pointwise stabilizer of 0..i-1 is closed by complete
// constrained searches (one per candidate image not yet in the orbit), and
// the group order is the product of the orbit lengths.
AutomorphismGroup automorphism_group(const Graph& g);

std::vector<std::vector<int>> orbits(int n, const std::vector<Permutation>& generators);

// True iff relabelling g by p reproduces h (resp. g itself).
bool check_isomorphism(const Graph& g, const Graph& h, const Permutation& p);
bool is_automorphism(const Graph& g, const Permutation& p);

}  // namespace gm

#endif
