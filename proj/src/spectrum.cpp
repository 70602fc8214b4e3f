#include "gm/spectrum.hpp"

#include <sstream>

namespace gm {

void IntPolynomial::normalize() {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) coeffs.push_back(0);
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const mpz_class& c = coeffs[d];
        if (c == 0 && !(first && d == 0)) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (d == 0 || a != 1) os << a.get_str();
        if (d > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (d > 1) os << "^" << d;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::vector<std::string> IntPolynomial::coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.get_str());
    return out;
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return IntPolynomial({0});  // empty acts as zero
    std::vector<mpz_class> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial char_poly(const Graph& g) {
    const int n = g.order();
    std::vector<mpz_class> c(n + 1, 0);
    c[n] = 1;
    if (n == 0) return IntPolynomial(std::move(c));

    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k) / k.
    auto at = [n](std::vector<mpz_class>& m, int i, int j) -> mpz_class& {
        return m[static_cast<size_t>(i) * n + j];
    };
    std::vector<mpz_class> m(static_cast<size_t>(n) * n, 0), next(m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at(m, i, j) = g.adjacent(i, j) ? 1 : 0;
    c[n - 1] = 0;  // trace of an adjacency matrix
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) at(m, i, i) += c[n - k + 1];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                mpz_class& acc = at(next, i, j);
                acc = 0;
                // row i of A is sparse 0/1: sum over neighbours of i
                const BitRow& r = g.row(i);
                for (int t = r.next_set(0); t != -1; t = r.next_set(t + 1)) acc += at(m, t, j);
            }
        std::swap(m, next);
        mpz_class tr = 0;
        for (int i = 0; i < n; ++i) tr += at(m, i, i);
        mpz_class q;
        mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = -q;
    }
    return IntPolynomial(std::move(c));
}

bool cospectral(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    return char_poly(a) == char_poly(b);
}

}  // namespace gm
