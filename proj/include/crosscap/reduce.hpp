#ifndef CROSSCAP_REDUCE_HPP
#define CROSSCAP_REDUCE_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "detail/layout.hpp"
#include "keg.hpp"

namespace crosscap {

namespace detail {

// A loop closing both strands at one end of a region, or any loop on a
// single crossing, is a twisted kink.
inline bool removable_loop(const Layout& lay, const PEdge& e)
{
    return e.from == e.to && (lay.vertices[e.from].kink || e.from_port.end == e.to_port.end);
}

// Returns false if the graph vanished.
inline bool drop_loops(Layout& lay)
{
    for (;;) {
        const std::size_t E = lay.cycle.size();
        std::size_t i = 0;
        while (i < E && !removable_loop(lay, lay.cycle[i]))
            ++i;
        if (i == E)
            return true;
        if (E == 2) {
            lay.cycle.clear();
            return false;
        }
        const std::size_t p = (i + E - 1) % E, n = (i + 1) % E;
        const PEdge joined{lay.cycle[p].from, lay.cycle[n].to, lay.cycle[p].from_port,
                           lay.cycle[n].to_port};
        std::vector<PEdge> next;
        next.reserve(E - 2);
        for (std::size_t k = 0; k < E; ++k) {
            if (k == p)
                next.push_back(joined);
            else if (k != i && k != n)
                next.push_back(lay.cycle[k]);
        }
        lay.cycle = std::move(next);
    }
}

inline int gauge_count(const Vertex& v) { return v.kink ? 8 : 4; }

// Merges x and y if two edges joining them meet x at one end and y
// at one end, side to side, under some gauge of each.
inline bool try_merge(Layout& lay, VertexId x, VertexId y, std::size_t k0, std::size_t k1)
{
    const std::size_t ks[2] = {k0, k1};
    auto port_at = [&](const PEdge& e, VertexId v) { return e.from == v ? e.from_port : e.to_port; };
    for (int gx = 0; gx < gauge_count(lay.vertices[x]); ++gx) {
        for (int gy = 0; gy < gauge_count(lay.vertices[y]); ++gy) {
            bool ok = true;
            for (std::size_t k : ks) {
                const Port px = gauge(gx, port_at(lay.cycle[k], x));
                const Port py = gauge(gy, port_at(lay.cycle[k], y));
                if (px.end != End::R || py.end != End::L || px.side != py.side) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            std::vector<PEdge> next;
            next.reserve(lay.cycle.size() - 2);
            for (std::size_t k = 0; k < lay.cycle.size(); ++k) {
                if (k == k0 || k == k1)
                    continue;
                PEdge e = lay.cycle[k];
                if (e.from == x)
                    e.from_port = gauge(gx, e.from_port);
                if (e.to == x)
                    e.to_port = gauge(gx, e.to_port);
                if (e.from == y) {
                    e.from_port = gauge(gy, e.from_port);
                    e.from = x;
                }
                if (e.to == y) {
                    e.to_port = gauge(gy, e.to_port);
                    e.to = x;
                }
                next.push_back(e);
            }
            lay.cycle = std::move(next);
            Vertex& vx = lay.vertices[x];
            vx.parity = vx.parity + lay.vertices[y].parity;
            vx.kink = false;
            return true;
        }
    }
    return false;
}

inline bool merge_once(Layout& lay)
{
    std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> between;
    for (std::size_t k = 0; k < lay.cycle.size(); ++k) {
        const PEdge& e = lay.cycle[k];
        if (e.from != e.to)
            between[std::minmax(e.from, e.to)].push_back(k);
    }
    for (const auto& [xy, ks] : between) {
        for (std::size_t a = 0; a < ks.size(); ++a)
            for (std::size_t b = a + 1; b < ks.size(); ++b)
                if (try_merge(lay, xy.first, xy.second, ks[a], ks[b]))
                    return true;
    }
    return false;
}

// Turns every remaining single crossing into an ordinary odd region
// whose strands both enter at L.
inline void settle_singles(Layout& lay)
{
    const std::size_t E = lay.cycle.size();
    std::vector<std::vector<std::size_t>> in(lay.vertices.size());
    for (std::size_t i = 0; i < E; ++i)
        in[lay.cycle[i].to].push_back(i);
    for (VertexId v = 0; v < lay.vertices.size(); ++v) {
        if (!lay.vertices[v].kink || in[v].size() != 2)
            continue;
        const Port a = lay.cycle[in[v][0]].to_port, b = lay.cycle[in[v][1]].to_port;
        int g = 0;
        while (g < 8 && !(gauge(g, a) == Port{Pole::A, End::L} && gauge(g, b) == Port{Pole::B, End::L}))
            ++g;
        for (auto& e : lay.cycle) {
            if (e.from == v)
                e.from_port = gauge(g, e.from_port);
            if (e.to == v)
                e.to_port = gauge(g, e.to_port);
        }
        lay.vertices[v].kink = false;
    }
}

inline KnotEulerGraph reduce_layout(Layout lay)
{
    for (;;) {
        if (!drop_loops(lay))
            return {};
        if (!merge_once(lay))
            break;
    }
    settle_singles(lay);
    return settle(lay);
}

} // namespace detail

inline KnotEulerGraph reduce(const KnotEulerGraph& g)
{
    if (!validate(g).ok())
        throw Error("not a knot Eulerian graph");
    if (g.trivial())
        return g;
    return detail::reduce_layout(detail::layout(g));
}

} // namespace crosscap

#endif
