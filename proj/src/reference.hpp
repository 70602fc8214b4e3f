#ifndef GM_REFERENCE_HPP
#define GM_REFERENCE_HPP

#include <optional>

#include "gm/graph.hpp"
#include "gm/permutation.hpp"
#include "gm/spectrum.hpp"

// Slow, independently-coded baselines the test suite compares the library
// against.  Deliberately kept structure-free: no shared code paths with the
// main implementations beyond the basic Graph type.
namespace gm::reference {

// det(xI - A) by first-row cofactor expansion over polynomial entries.
// Practical for n <= 7.
IntPolynomial char_poly_cofactor(const Graph& g);

// Exhaustive scan over all n! vertex bijections; returns the
// lexicographically first witness.  Practical for n <= 8.
std::optional<Permutation> isomorphism_bruteforce(const Graph& g, const Graph& h);

// Number of adjacency-preserving bijections g -> g.
long automorphism_count_bruteforce(const Graph& g);

}  // namespace gm::reference

#endif
