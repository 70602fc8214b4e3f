#include "gm/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gm {

void check_permutation(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int v : images) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("permutation image out of range: " + std::to_string(v));
        if (seen[v]) throw std::invalid_argument("permutation image repeated: " + std::to_string(v));
        seen[v] = 1;
    }
}

Permutation::Permutation(std::vector<int> images) : map(std::move(images)) {
    check_permutation(map);
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.map.resize(n);
    std::iota(p.map.begin(), p.map.end(), 0);
    return p;
}

Permutation Permutation::transposition(int n, int u, int v) {
    Permutation p = identity(n);
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("transposition endpoint out of range");
    std::swap(p.map[u], p.map[v]);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.map.resize(map.size());
    for (int v = 0; v < size(); ++v) p.map[map[v]] = v;
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size())
        throw std::invalid_argument("composing permutations of different degree");
    Permutation p;
    p.map.resize(map.size());
    for (int v = 0; v < size(); ++v) p.map[v] = map[other.map[v]];
    return p;
}

bool Permutation::is_identity() const {
    for (int v = 0; v < size(); ++v)
        if (map[v] != v) return false;
    return true;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << '[';
    for (int v = 0; v < size(); ++v) {
        if (v) os << ',';
        os << map[v];
    }
    os << ']';
    return os.str();
}

}  // namespace gm
