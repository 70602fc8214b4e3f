#ifndef GM_SPECTRUM_HPP
#define GM_SPECTRUM_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gm/graph.hpp"

namespace gm {

// Dense integer polynomial, coefficients ascending by degree.
// Characteristic polynomials of adjacency matrices are monic of degree n
// with coefficient 0 at x^(n-1) and -|E| at x^(n-2).
struct IntPolynomial {
    std::vector<mpz_class> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> c) : coeffs(std::move(c)) { normalize(); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    // drop leading zeros (the zero polynomial keeps a single 0 coefficient)
    void normalize();

    mpz_class evaluate(const mpz_class& x) const;

    bool operator==(const IntPolynomial& other) const { return coeffs == other.coeffs; }
    bool operator!=(const IntPolynomial& other) const { return !(*this == other); }

    // human-readable, highest degree first, e.g. "x^4 - 4*x^2"
    std::string str() const;
    // decimal coefficient strings, degree-ascending (the JSON wire format)
    std::vector<std::string> coefficient_strings() const;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

// Characteristic polynomial of the adjacency matrix, det(xI - A), computed
// exactly over the integers with the Faddeev-LeVerrier recurrence (every
// division in the recurrence is exact).
IntPolynomial char_poly(const Graph& g);

// Exact cospectrality; graphs of different order are never cospectral.
bool cospectral(const Graph& a, const Graph& b);

}  // namespace gm

#endif
