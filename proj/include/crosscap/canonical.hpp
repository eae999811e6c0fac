#ifndef CROSSCAP_CANONICAL_HPP
#define CROSSCAP_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "keg.hpp"

namespace crosscap {

using Code = std::string; // raw bytes

struct Canonical
{
    Code code;
    KnotEulerGraph graph; // the minimising rotation, numbering and gauge
};

namespace detail {

inline void put16(std::string& s, std::uint32_t x)
{
    s.push_back(static_cast<char>((x >> 8) & 0xff));
    s.push_back(static_cast<char>(x & 0xff));
}

inline char vertex_byte(const Vertex& v)
{
    return static_cast<char>(static_cast<int>(v.parity) | (v.kink ? 2 : 0) |
                             (static_cast<int>(v.strands) << 2));
}

} // namespace detail

// Minimum over rotations, both traversal directions and per-vertex pole
// swaps of the serialised cycle with first-visit numbering. The pole
// swap is fixed greedily: the first endpoint seen at a vertex reads A.
inline Canonical canonicalize(const KnotEulerGraph& g)
{
    if (!validate(g).ok())
        throw Error("not a knot Eulerian graph");
    Canonical best;
    if (g.trivial()) {
        best.code = std::string(1, '\0');
        return best;
    }
    const std::size_t V = g.vertices.size();
    const std::size_t E = g.cycle.size();
    if (V > 0xffff)
        throw Error("graph too large to encode");

    std::vector<Edge> rev(E);
    for (std::size_t i = 0; i < E; ++i)
        rev[i] = reverse_edge(g.cycle[E - 1 - i]);

    std::vector<std::uint32_t> num(V);
    std::vector<std::uint8_t> sw(V);
    std::vector<VertexId> order;
    std::string cand, best_cand;
    std::vector<VertexId> best_order;
    std::vector<std::uint8_t> best_sw;
    std::size_t best_r = 0;
    bool best_rev = false;
    order.reserve(V);
    cand.reserve(3 + V + 5 * E);

    for (int dir = 0; dir < 2; ++dir) {
        const std::vector<Edge>& cyc = dir == 0 ? g.cycle : rev;
        for (std::size_t r = 0; r < E; ++r) {
            std::fill(num.begin(), num.end(), UINT32_MAX);
            order.clear();
            std::string edges;
            edges.reserve(5 * E);
            for (std::size_t k = 0; k < E; ++k) {
                const Edge& e = cyc[(r + k) % E];
                for (int end = 0; end < 2; ++end) {
                    const VertexId x = end == 0 ? e.from : e.to;
                    if (num[x] == UINT32_MAX) {
                        num[x] = static_cast<std::uint32_t>(order.size());
                        order.push_back(x);
                        sw[x] = (end == 0 ? e.from_pole : e.to_pole) == Pole::B;
                    }
                }
                detail::put16(edges, num[e.from]);
                detail::put16(edges, num[e.to]);
                const int pf = static_cast<int>(e.from_pole) ^ sw[e.from];
                const int pt = static_cast<int>(e.to_pole) ^ sw[e.to];
                edges.push_back(static_cast<char>(pf << 1 | pt));
            }
            cand.assign(1, '\x01');
            detail::put16(cand, static_cast<std::uint32_t>(V));
            for (VertexId x : order)
                cand.push_back(detail::vertex_byte(g.vertices[x]));
            cand += edges;
            if (best_cand.empty() || cand < best_cand) {
                best_cand = cand;
                best_order = order;
                best_sw = sw;
                best_r = r;
                best_rev = dir == 1;
            }
        }
    }

    best.code = best_cand;
    const std::vector<Edge>& cyc = best_rev ? rev : g.cycle;
    std::vector<VertexId> perm(V);
    for (std::size_t i = 0; i < V; ++i)
        perm[best_order[i]] = static_cast<VertexId>(i);
    best.graph.vertices.resize(V);
    for (std::size_t i = 0; i < V; ++i)
        best.graph.vertices[i] = g.vertices[best_order[i]];
    best.graph.cycle.resize(E);
    for (std::size_t k = 0; k < E; ++k) {
        const Edge& e = cyc[(best_r + k) % E];
        best.graph.cycle[k] = Edge{perm[e.from], perm[e.to],
                                   best_sw[e.from] ? flip(e.from_pole) : e.from_pole,
                                   best_sw[e.to] ? flip(e.to_pole) : e.to_pole};
    }
    return best;
}

inline Code canonical_code(const KnotEulerGraph& g) { return canonicalize(g).code; }

inline std::string to_hex(std::string_view bytes)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(2 * bytes.size());
    for (unsigned char c : bytes) {
        s.push_back(digits[c >> 4]);
        s.push_back(digits[c & 15]);
    }
    return s;
}

inline std::string from_hex(std::string_view hex)
{
    auto val = [](char c) -> int {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        if (c >= 'A' && c <= 'F')
            return c - 'A' + 10;
        throw Error("bad hex digit");
    };
    if (hex.size() % 2)
        throw Error("odd hex length");
    std::string s;
    s.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2)
        s.push_back(static_cast<char>(val(hex[i]) << 4 | val(hex[i + 1])));
    return s;
}

} // namespace crosscap

#endif
