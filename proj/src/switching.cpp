#include "gm/switching.hpp"

#include <algorithm>
#include <stdexcept>

namespace gm {

const char* y_class_name(YClass c) {
    switch (c) {
        case YClass::Zero: return "zero";
        case YClass::Half: return "half";
        case YClass::Full: return "full";
        case YClass::Invalid: return "invalid";
    }
    return "?";
}

namespace {

YClass classify_count(int count, int cell_size) {
    if (count == 0) return YClass::Zero;
    if (count == cell_size) return YClass::Full;
    if (2 * count == cell_size) return YClass::Half;
    return YClass::Invalid;
}

}  // namespace

ValidationReport validate_partition(const Graph& g, const SwitchingPartition& p) {
    ValidationReport rep;
    const int n = g.order();
    const int l = static_cast<int>(p.cells.size());
    if (l == 0) throw std::invalid_argument("switching partition needs at least one cell");

    BitRow covered(n);
    for (const auto& cell : p.cells) {
        if (cell.empty()) throw std::invalid_argument("switching cell must be nonempty");
        auto sorted = check_vertex_set(g, cell);
        for (int v : sorted) {
            if (covered.test(v))
                throw std::invalid_argument("switching cells overlap at vertex " + std::to_string(v));
            covered.set(v);
        }
        rep.cells.push_back(std::move(sorted));
    }

    std::vector<BitRow> masks;
    masks.reserve(l);
    for (const auto& cell : rep.cells) masks.push_back(set_mask(n, cell));

    rep.valid = true;

    // condition on X: each vertex of X_i sees a constant number of X_j
    rep.cell_degrees.assign(l, std::vector<int>(l, -1));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int common = -1;
            bool constant = true;
            for (int v : rep.cells[i]) {
                int c = g.row(v).and_count(masks[j]);
                if (common == -1) common = c;
                else if (c != common) { constant = false; break; }
            }
            if (constant) rep.cell_degrees[i][j] = common;
            else rep.valid = false;
        }

    // condition on Y: every Y vertex sees 0, half or all of each cell
    for (int v = 0; v < n; ++v) {
        if (covered.test(v)) continue;
        rep.y_vertices.push_back(v);
        std::vector<YClass> classes(l);
        for (int j = 0; j < l; ++j) {
            classes[j] = classify_count(g.row(v).and_count(masks[j]),
                                        static_cast<int>(rep.cells[j].size()));
            if (classes[j] == YClass::Invalid) rep.valid = false;
        }
        rep.y_classes.push_back(std::move(classes));
    }
    return rep;
}

bool is_switching_partition(const Graph& g, const SwitchingPartition& p) {
    return validate_partition(g, p).valid;
}

bool is_switching_set(const Graph& g, const std::vector<int>& x) {
    return is_switching_partition(g, SwitchingPartition::single(x));
}

Graph apply_switching(const Graph& g, const SwitchingPartition& p) {
    ValidationReport rep = validate_partition(g, p);
    if (!rep.valid) throw std::invalid_argument("partition does not satisfy the switching conditions");

    Graph out = g;
    for (size_t yi = 0; yi < rep.y_vertices.size(); ++yi) {
        const int v = rep.y_vertices[yi];
        for (size_t j = 0; j < rep.cells.size(); ++j) {
            if (rep.y_classes[yi][j] != YClass::Half) continue;
            // complement v's neighbourhood inside cell j
            for (int x : rep.cells[j]) out.toggle_edge(v, x);
        }
    }
    return out;
}

Graph apply_switching(const Graph& g, const std::vector<int>& x) {
    return apply_switching(g, SwitchingPartition::single(x));
}

BlockDecomposition block_decomposition(const Graph& g, const std::vector<int>& x) {
    SwitchingPartition p = SwitchingPartition::single(x);
    ValidationReport rep = validate_partition(g, p);
    if (!rep.valid) throw std::invalid_argument("not a switching set");

    BlockDecomposition d;
    d.x = rep.cells[0];
    d.cell_degree = rep.cell_degrees[0][0];
    const int k = static_cast<int>(d.x.size());
    d.b.assign(k, std::vector<uint8_t>(k, 0));
    for (int a = 0; a < k; ++a)
        for (int b2 = 0; b2 < k; ++b2)
            d.b[a][b2] = g.adjacent(d.x[a], d.x[b2]) ? 1 : 0;

    for (size_t yi = 0; yi < rep.y_vertices.size(); ++yi) {
        switch (rep.y_classes[yi][0]) {
            case YClass::Half: d.half_vertices.push_back(rep.y_vertices[yi]); break;
            case YClass::Full: d.full_vertices.push_back(rep.y_vertices[yi]); break;
            case YClass::Zero: d.zero_vertices.push_back(rep.y_vertices[yi]); break;
            case YClass::Invalid: break;  // unreachable, rep.valid
        }
    }
    d.n.assign(k, std::vector<uint8_t>(d.half_vertices.size(), 0));
    for (int a = 0; a < k; ++a)
        for (size_t c = 0; c < d.half_vertices.size(); ++c)
            d.n[a][c] = g.adjacent(d.x[a], d.half_vertices[c]) ? 1 : 0;
    return d;
}

Graph reassemble(const Graph& g, const BlockDecomposition& d) {
    Graph out(g.order());
    const int k = static_cast<int>(d.x.size());
    for (int a = 0; a < k; ++a)
        for (int b2 = a + 1; b2 < k; ++b2)
            if (d.b[a][b2]) out.add_edge(d.x[a], d.x[b2]);
    for (int a = 0; a < k; ++a) {
        for (size_t c = 0; c < d.half_vertices.size(); ++c)
            if (d.n[a][c]) out.add_edge(d.x[a], d.half_vertices[c]);
        for (int v : d.full_vertices) out.add_edge(d.x[a], v);
    }
    // the Y-Y part is untouched by switching; copy it over from g
    std::vector<int> y;
    y.insert(y.end(), d.half_vertices.begin(), d.half_vertices.end());
    y.insert(y.end(), d.full_vertices.begin(), d.full_vertices.end());
    y.insert(y.end(), d.zero_vertices.begin(), d.zero_vertices.end());
    for (size_t a = 0; a < y.size(); ++a)
        for (size_t b2 = a + 1; b2 < y.size(); ++b2)
            if (g.adjacent(y[a], y[b2])) out.add_edge(y[a], y[b2]);
    return out;
}

std::vector<std::vector<int>> enumerate_switching_sets(const Graph& g, int size,
                                                       bool cocliques_only) {
    if (size < 2) throw std::invalid_argument("switching sets need at least 2 vertices");
    std::vector<std::vector<int>> found;
    const int n = g.order();
    if (size > n) return found;

    std::vector<int> current;
    current.reserve(size);

    // DFS over combinations in lexicographic order.  Partial sets are pruned
    // when the induced-degree spread already exceeds the number of vertices
    // still to be added (each later vertex raises each induced degree by at
    // most one), or when an internal edge appears in coclique mode.
    auto extend = [&](auto&& self, int next_min, std::vector<int>& induced_deg) -> void {
        const int have = static_cast<int>(current.size());
        if (have == size) {
            if (is_switching_set(g, current)) found.push_back(current);
            return;
        }
        const int remaining = size - have;
        for (int v = next_min; v <= n - remaining; ++v) {
            int dv = 0;
            bool internal_edge = false;
            for (int u : current)
                if (g.adjacent(u, v)) { ++dv; internal_edge = true; }
            if (cocliques_only && internal_edge) continue;

            current.push_back(v);
            induced_deg.push_back(dv);
            for (int i = 0; i < have; ++i)
                if (g.adjacent(current[i], v)) ++induced_deg[i];

            auto [lo, hi] = std::minmax_element(induced_deg.begin(), induced_deg.end());
            if (*hi - *lo <= remaining - 1) self(self, v + 1, induced_deg);

            for (int i = 0; i < have; ++i)
                if (g.adjacent(current[i], v)) --induced_deg[i];
            induced_deg.pop_back();
            current.pop_back();
        }
    };
    std::vector<int> induced_deg;
    extend(extend, 0, induced_deg);
    return found;
}

}  // namespace gm
