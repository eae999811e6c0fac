#ifndef CROSSCAP_DETAIL_LAYOUT_HPP
#define CROSSCAP_DETAIL_LAYOUT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "../keg.hpp"

// Positioned form of a graph: each endpoint sits on a side (the pole)
// and an end of its region's axis. A strand entering at one end leaves
// at the other, on the opposite side iff the region is odd.

namespace crosscap::detail {

enum class End : std::uint8_t { L = 0, R = 1 };

constexpr End flip(End e) noexcept { return e == End::L ? End::R : End::L; }

struct Port
{
    Pole side = Pole::A;
    End end = End::L;

    friend bool operator==(const Port&, const Port&) = default;
};

// Corners in cyclic order around a region.
constexpr std::array<Port, 4> corners{
    Port{Pole::A, End::L}, Port{Pole::A, End::R}, Port{Pole::B, End::R}, Port{Pole::B, End::L}};

constexpr int corner(Port p) noexcept
{
    if (p.side == Pole::A)
        return p.end == End::L ? 0 : 1;
    return p.end == End::R ? 2 : 3;
}

// Symmetries of the corner square. Elements 0..3 keep the axis (identity,
// side swap, end swap, both); 4..7 turn it a quarter, which only a single
// crossing allows.
constexpr Port gauge(int g, Port p) noexcept
{
    switch (g) {
    case 0: return p;
    case 1: return Port{flip(p.side), p.end};
    case 2: return Port{p.side, flip(p.end)};
    case 3: return Port{flip(p.side), flip(p.end)};
    default: break;
    }
    const int k = corner(p);
    return corners[g <= 5 ? (k + (g == 4 ? 1 : 3)) % 4 : (g == 6 ? (4 - k) % 4 : (6 - k) % 4)];
}

constexpr Port exit_port(Port in, Parity q) noexcept
{
    return Port{cross(in.side, q), flip(in.end)};
}

struct PEdge
{
    VertexId from = 0;
    VertexId to = 0;
    Port from_port;
    Port to_port;
};

struct Layout
{
    std::vector<Vertex> vertices;
    std::vector<PEdge> cycle;
};

constexpr PEdge reversed(const PEdge& e) noexcept
{
    return PEdge{e.to, e.from, e.to_port, e.from_port};
}

// Assumes g is valid. The first visit of every vertex enters at end L.
inline Layout layout(const KnotEulerGraph& g)
{
    Layout out;
    out.vertices = g.vertices;
    const std::size_t E = g.cycle.size();
    out.cycle.resize(E);
    std::vector<std::uint8_t> seen(g.vertices.size(), 0);
    for (std::size_t i = 0; i < E; ++i) {
        const Edge& e = g.cycle[i];
        out.cycle[i].from = e.from;
        out.cycle[i].to = e.to;
        out.cycle[i].from_port.side = e.from_pole;
        out.cycle[i].to_port.side = e.to_pole;
    }
    for (std::size_t i = 0; i < E; ++i) {
        const VertexId v = g.cycle[i].to;
        End in = End::L;
        if (seen[v]++ && g.vertices[v].strands == Strands::Antiparallel)
            in = End::R;
        out.cycle[i].to_port.end = in;
        out.cycle[(i + 1) % E].from_port.end = flip(in);
    }
    return out;
}

// Inverse of layout: drops unused vertex slots, renormalises ends so
// that every first visit enters at L and records the strand relation.
inline KnotEulerGraph settle(const Layout& lay)
{
    const std::size_t E = lay.cycle.size();
    std::vector<VertexId> id(lay.vertices.size(), UINT32_MAX);
    for (const auto& e : lay.cycle)
        id[e.from] = 0;
    KnotEulerGraph g;
    for (std::size_t v = 0; v < id.size(); ++v) {
        if (id[v] == UINT32_MAX)
            continue;
        id[v] = static_cast<VertexId>(g.vertices.size());
        g.vertices.push_back(lay.vertices[v]);
    }
    std::vector<std::int8_t> first(g.vertices.size(), -1);
    g.cycle.resize(E);
    for (std::size_t i = 0; i < E; ++i) {
        const PEdge& e = lay.cycle[i];
        g.cycle[i] = Edge{id[e.from], id[e.to], e.from_port.side, e.to_port.side};
        auto& f = first[id[e.to]];
        if (f < 0) {
            f = static_cast<std::int8_t>(e.to_port.end);
        } else {
            const bool same = static_cast<std::int8_t>(e.to_port.end) == f;
            g.vertices[id[e.to]].strands = same ? Strands::Parallel : Strands::Antiparallel;
        }
    }
    return g;
}

} // namespace crosscap::detail

#endif
