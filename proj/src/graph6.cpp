#include "gm/graph6.hpp"

#include <cstdint>

namespace gm {
namespace {

void append_bigendian(std::string& out, uint64_t value, int groups) {
    for (int k = groups - 1; k >= 0; --k)
        out.push_back(static_cast<char>(((value >> (6 * k)) & 63) + 63));
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        append_bigendian(out, static_cast<uint64_t>(n), 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        append_bigendian(out, static_cast<uint64_t>(n), 6);
    }

    int bits = 0, value = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(value + 63));
                bits = 0;
                value = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
    return out;
}

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6Error("empty graph6 input");

    size_t pos = 0;
    auto need = [&](size_t k) {
        if (text.size() - pos < k) throw Graph6Error("truncated graph6 input");
    };
    auto byte = [&](size_t i) -> int {
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw Graph6Error("byte outside graph6 range at offset " + std::to_string(i));
        return c;
    };

    uint64_t n = 0;
    if (byte(0) != 126) {
        n = static_cast<uint64_t>(byte(0) - 63);
        pos = 1;
    } else {
        need(2);
        int header_groups;
        if (byte(1) != 126) {
            header_groups = 3;
            pos = 1;
        } else {
            header_groups = 6;
            pos = 2;
        }
        need(static_cast<size_t>(header_groups));
        for (int k = 0; k < header_groups; ++k) n = (n << 6) | static_cast<uint64_t>(byte(pos + k) - 63);
        pos += header_groups;
        if (header_groups == 3 && n < 63)
            throw Graph6Error("overlong graph6 order header");
        if (header_groups == 6 && n < 258048)
            throw Graph6Error("overlong graph6 order header");
    }
    if (n > (1u << 20))
        throw Graph6Error("graph6 order too large for this tool: " + std::to_string(n));

    const int order = static_cast<int>(n);
    const uint64_t pair_bits = n * (n - 1) / 2;
    const size_t payload = static_cast<size_t>((pair_bits + 5) / 6);
    if (text.size() - pos != payload)
        throw Graph6Error("graph6 payload has wrong length (expected " +
                          std::to_string(payload) + " bytes, got " +
                          std::to_string(text.size() - pos) + ")");

    Graph g(order);
    size_t k = 0;
    int bits_left = 0, value = 0;
    auto next_bit = [&]() {
        if (bits_left == 0) {
            value = byte(pos + k) - 63;
            ++k;
            bits_left = 6;
        }
        --bits_left;
        return (value >> bits_left) & 1;
    };
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i)
            if (next_bit()) g.add_edge(i, j);
    // trailing padding must be zero
    while (k < payload || bits_left > 0)
        if (next_bit()) throw Graph6Error("nonzero padding bits in graph6 input");
    return g;
}

}  // namespace gm
