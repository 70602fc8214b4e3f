#include "reference.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace gm::reference {

namespace {

using Poly = IntPolynomial;

Poly det_expand(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly det;  // zero
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != k) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly term = poly_mul(m[0][k], det_expand(minor));
        det = (k % 2 == 0) ? poly_add(det, term) : poly_sub(det, term);
    }
    return det;
}

bool perm_preserves(const Graph& g, const Graph& h, const std::vector<int>& p) {
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != h.adjacent(p[u], p[v])) return false;
    return true;
}

}  // namespace

IntPolynomial char_poly_cofactor(const Graph& g) {
    const int n = g.order();
    if (n == 0) return IntPolynomial({mpz_class(1)});
    Poly x({mpz_class(0), mpz_class(1)});
    Poly minus_one({mpz_class(-1)});
    Poly zero({mpz_class(0)});
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) m[i][j] = x;
            else if (g.adjacent(i, j)) m[i][j] = minus_one;
        }
    return det_expand(m);
}

std::optional<Permutation> isomorphism_bruteforce(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return std::nullopt;
    std::vector<int> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        if (perm_preserves(g, h, p)) return Permutation(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

long automorphism_count_bruteforce(const Graph& g) {
    std::vector<int> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    long count = 0;
    do {
        if (perm_preserves(g, g, p)) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

}  // namespace gm::reference
