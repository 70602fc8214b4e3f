#ifndef GM_PERMUTATION_HPP
#define GM_PERMUTATION_HPP

#include <string>
#include <vector>

namespace gm {

// A permutation of {0, ..., n-1}, stored as the image table.
struct Permutation {
    std::vector<int> map;

    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // Transposition (u v) on n points.
    static Permutation transposition(int n, int u, int v);

    int size() const { return static_cast<int>(map.size()); }
    int operator()(int v) const { return map[v]; }

    Permutation inverse() const;
    // (a.compose(b))(v) = a(b(v)).
    Permutation compose(const Permutation& other) const;

    bool is_identity() const;
    bool operator==(const Permutation& other) const { return map == other.map; }

    std::string str() const;
};

// Throws std::invalid_argument unless `images` is a bijection on {0..n-1}.
void check_permutation(const std::vector<int>& images);

}  // namespace gm

#endif
