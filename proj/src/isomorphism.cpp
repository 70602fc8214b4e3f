#include "gm/isomorphism.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gm {
namespace {

// Joint colour refinement of g and h.  A vertex signature is its current
// colour followed by its neighbour count in every colour class; signatures
// from both graphs are renumbered together (sorted order), so equal classes
// keep equal ids.  Returns false as soon as some class has different sizes
// in g and h — no isomorphism can respect the seed colouring then.
bool refine(const Graph& g, const Graph& h, std::vector<int>& cg, std::vector<int>& ch,
            int& num_colors) {
    const int n = g.order();
    while (true) {
        std::vector<std::vector<int>> sig(2 * n);
        for (int side = 0; side < 2; ++side) {
            const Graph& gr = side ? h : g;
            const std::vector<int>& col = side ? ch : cg;
            for (int v = 0; v < n; ++v) {
                std::vector<int> s(num_colors + 1, 0);
                s[0] = col[v];
                const BitRow& r = gr.row(v);
                for (int w = r.next_set(0); w != -1; w = r.next_set(w + 1)) ++s[1 + col[w]];
                sig[side * n + v] = std::move(s);
            }
        }
        std::vector<std::vector<int>> keys(sig);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        const int next_colors = static_cast<int>(keys.size());

        std::vector<int> size_g(next_colors, 0), size_h(next_colors, 0);
        for (int v = 0; v < n; ++v) {
            int a = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v]) -
                                     keys.begin());
            int b = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[n + v]) -
                                     keys.begin());
            cg[v] = a;
            ch[v] = b;
            ++size_g[a];
            ++size_h[b];
        }
        if (size_g != size_h) return false;
        if (next_colors == num_colors) return true;  // stable
        num_colors = next_colors;
        if (num_colors == n) return true;  // discrete
    }
}

std::optional<Permutation> leaf_mapping(const Graph& g, const Graph& h,
                                        const std::vector<int>& cg, const std::vector<int>& ch) {
    const int n = g.order();
    std::vector<int> by_color(n, -1), images(n, -1);
    for (int v = 0; v < n; ++v) by_color[ch[v]] = v;
    for (int v = 0; v < n; ++v) images[v] = by_color[cg[v]];
    Permutation p(images);
    if (check_isomorphism(g, h, p)) return p;
    return std::nullopt;
}

std::optional<Permutation> iso_search(const Graph& g, const Graph& h, std::vector<int> cg,
                                      std::vector<int> ch, int num_colors) {
    if (!refine(g, h, cg, ch, num_colors)) return std::nullopt;
    const int n = g.order();
    if (num_colors == n) return leaf_mapping(g, h, cg, ch);

    std::vector<int> size_g(num_colors, 0);
    for (int v = 0; v < n; ++v) ++size_g[cg[v]];
    int target = -1, best = std::numeric_limits<int>::max();
    for (int c = 0; c < num_colors; ++c)
        if (size_g[c] >= 2 && size_g[c] < best) {
            best = size_g[c];
            target = c;
        }
    assert(target != -1);

    int v = 0;
    while (cg[v] != target) ++v;  // lowest-labelled vertex of that class

    for (int u = 0; u < n; ++u) {
        if (ch[u] != target) continue;
        std::vector<int> cg2(cg), ch2(ch);
        cg2[v] = num_colors;
        ch2[u] = num_colors;
        if (auto r = iso_search(g, h, std::move(cg2), std::move(ch2), num_colors + 1)) return r;
    }
    return std::nullopt;
}

// Complete search for an automorphism of g fixing 0..prefix-1 pointwise and
// mapping prefix -> t.
std::optional<Permutation> automorphism_with_prefix(const Graph& g, int prefix, int t) {
    const int n = g.order();
    std::vector<int> cg(n, 0), ch(n, 0);
    for (int v = 0; v < prefix; ++v) cg[v] = ch[v] = v + 1;
    cg[prefix] = prefix + 1;
    ch[t] = prefix + 1;
    return iso_search(g, g, std::move(cg), std::move(ch), prefix + 2);
}

}  // namespace

bool check_isomorphism(const Graph& g, const Graph& h, const Permutation& p) {
    if (g.order() != h.order() || p.size() != g.order()) return false;
    return apply_permutation(g, p) == h;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    return check_isomorphism(g, g, p);
}

std::optional<Permutation> are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return std::nullopt;
    if (g.edge_count() != h.edge_count()) return std::nullopt;
    if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
    const int n = g.order();
    if (n == 0) return Permutation::identity(0);
    return iso_search(g, h, std::vector<int>(n, 0), std::vector<int>(n, 0), 1);
}

std::optional<Permutation> isomorphism_fixing_set(const Graph& g, const Graph& h,
                                                 const std::vector<int>& x) {
    if (g.order() != h.order()) return std::nullopt;
    check_vertex_set(g, x);
    const int n = g.order();
    if (n == 0) return Permutation::identity(0);
    std::vector<int> cg(n, 0), ch(n, 0);
    for (int v : x) cg[v] = ch[v] = 1;
    return iso_search(g, h, std::move(cg), std::move(ch), 2);
}

std::vector<std::vector<int>> orbits(int n, const std::vector<Permutation>& generators) {
    for (const auto& p : generators)
        if (p.size() != n) throw std::invalid_argument("generator degree does not match");
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& p : generators)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(p(v));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<int>> out;
    std::vector<int> index(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (index[r] == -1) {
            index[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[index[r]].push_back(v);
    }
    return out;
}

AutomorphismGroup automorphism_group(const Graph& g) {
    const int n = g.order();
    AutomorphismGroup result;
    result.order = 1;

    for (int i = 0; i < n; ++i) {
        auto fixes_prefix = [&](const Permutation& p) {
            for (int v = 0; v < i; ++v)
                if (p(v) != v) return false;
            return true;
        };
        // forward closure is enough: the generated group is finite, so every
        // inverse is a positive power of its generator
        auto close_orbit = [&]() {
            std::vector<char> in(n, 0);
            std::vector<int> stack{i};
            in[i] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (const auto& p : result.generators) {
                    if (!fixes_prefix(p)) continue;
                    int w = p(v);
                    if (!in[w]) {
                        in[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            return in;
        };

        std::vector<char> in_orbit = close_orbit();
        for (int t = i + 1; t < n; ++t) {
            if (in_orbit[t]) continue;
            if (auto p = automorphism_with_prefix(g, i, t)) {
                result.generators.push_back(std::move(*p));
                in_orbit = close_orbit();
                assert(in_orbit[t]);
            }
        }
        int orbit_size = 0;
        for (char c : in_orbit) orbit_size += c;
        result.order *= orbit_size;
    }
    result.orbits = orbits(n, result.generators);
    return result;
}

}  // namespace gm
