#ifndef CROSSCAP_EXPAND_HPP
#define CROSSCAP_EXPAND_HPP

#include <map>
#include <unordered_set>
#include <vector>

#include "canonical.hpp"
#include "moves.hpp"
#include "projection.hpp"
#include "reduce.hpp"

namespace crosscap {

// Which attachment configurations expand_all tries for each edge pair.
struct VariantSpace
{
    bool gaps = true;          // band ends inside a decomposed region
    bool double_gaps = true;   // both ends inside one region split in three
    bool loop_families = true; // host kinks with several crossings
    bool part_families = true; // decomposition parts of three or more odd crossings
    std::vector<Part> bands{Part::Single, Part::Odd, Part::Even};
};

namespace detail {

inline std::vector<Split> splits_of(const Vertex& v, std::uint8_t count, const VariantSpace& sp)
{
    std::vector<Split> out;
    if (v.kink)
        return out;
    std::vector<Part> kinds{Part::Single, Part::Even};
    if (sp.part_families)
        kinds.push_back(Part::Odd);
    std::array<std::size_t, 3> idx{};
    const std::size_t n = kinds.size();
    std::size_t combos = 1;
    for (std::uint8_t i = 0; i < count; ++i)
        combos *= n;
    for (std::size_t c = 0; c < combos; ++c) {
        std::size_t r = c;
        Split s;
        s.count = count;
        for (std::uint8_t i = 0; i < count; ++i) {
            idx[i] = r % n;
            r /= n;
            s.parts[i] = kinds[idx[i]];
        }
        if (s.parity() == v.parity)
            out.push_back(s);
    }
    return out;
}

inline std::vector<Site> edge_sites(const VariantSpace& sp)
{
    std::vector<Site> out;
    for (std::uint8_t d = 0; d < 3; ++d) {
        Site s;
        s.descendant = d;
        out.push_back(s);
        if (d == 1 && sp.loop_families) {
            s.loop = Part::Odd;
            out.push_back(s);
            s.loop = Part::Even;
            out.push_back(s);
        }
    }
    return out;
}

inline std::vector<Site> gap_sites(std::uint8_t cut, const VariantSpace& sp)
{
    std::vector<Site> out;
    for (const Site& e : edge_sites(sp))
        for (bool other : {false, true}) {
            Site s = e;
            s.kind = Site::Kind::Gap;
            s.cut = cut;
            s.other_pass = other;
            out.push_back(s);
        }
    return out;
}

} // namespace detail

inline std::vector<BridgeVariant> bridge_variants(const KnotEulerGraph& g, std::size_t s, std::size_t t,
                                                  const VariantSpace& sp = {})
{
    std::vector<BridgeVariant> out;
    const Vertex& hs = g.vertices[g.cycle[s].to];
    const Vertex& ht = g.vertices[g.cycle[t].to];
    const auto edges = detail::edge_sites(sp);
    const auto gaps0 = detail::gap_sites(0, sp);
    auto emit = [&](const Split& a, const Split& b, const std::vector<Site>& xs, const std::vector<Site>& ys) {
        for (const Site& x : xs)
            for (const Site& y : ys)
                for (Part p : sp.bands) {
                    BridgeVariant v;
                    v.s = x;
                    v.g = y;
                    v.p = p;
                    v.split_s = a;
                    v.split_g = b;
                    out.push_back(v);
                }
    };
    const Split none;
    emit(none, none, edges, edges);
    if (!sp.gaps)
        return out;
    if (g.cycle[s].to != g.cycle[t].to) {
        const auto ss = detail::splits_of(hs, 2, sp);
        const auto st = detail::splits_of(ht, 2, sp);
        for (const Split& a : ss)
            emit(a, none, gaps0, edges);
        for (const Split& b : st)
            emit(none, b, edges, gaps0);
        for (const Split& a : ss)
            for (const Split& b : st)
                emit(a, b, gaps0, gaps0);
        return out;
    }
    for (const Split& a : detail::splits_of(hs, 2, sp)) {
        emit(a, none, gaps0, edges);
        emit(a, none, edges, gaps0);
        for (const Site& x : gaps0)
            for (const Site& y : gaps0)
                if (x.other_pass == y.other_pass) // the two ends must sit on different strands
                    for (Part p : sp.bands) {
                        BridgeVariant v;
                        v.s = x;
                        v.g = y;
                        v.p = p;
                        v.split_s = a;
                        out.push_back(v);
                    }
    }
    if (!sp.double_gaps)
        return out;
    const auto gaps1 = detail::gap_sites(1, sp);
    for (const Split& a : detail::splits_of(hs, 3, sp)) {
        emit(a, none, gaps0, gaps1);
        emit(a, none, gaps1, gaps0);
    }
    return out;
}

using GraphSet = std::map<Code, KnotEulerGraph>;

// Reduced, realizable results of every bridge on g, keyed by canonical
// code; each value is the canonical representative of its code.
inline GraphSet expand_all(const KnotEulerGraph& g, const VariantSpace& sp = {})
{
    GraphSet out;
    std::unordered_set<Code> rejected;
    auto keep = [&](KnotEulerGraph r) {
        Canonical c = canonicalize(r);
        if (out.count(c.code) || rejected.count(c.code))
            return;
        if (is_realizable(c.graph))
            out.emplace(std::move(c.code), std::move(c.graph));
        else
            rejected.insert(std::move(c.code));
    };
    if (!validate(g).ok())
        throw Error("not a knot Eulerian graph");
    if (g.trivial()) {
        for (Part p : sp.bands)
            keep(detail::reduce_layout(detail::trivial_bridge(p)));
        return out;
    }
    const detail::Layout lay = detail::layout(g);
    for (const auto& [s, t] : enumerate_pairs(g))
        for (const BridgeVariant& v : bridge_variants(g, s, t, sp))
            if (auto r = detail::bridge_layout(g, lay, s, t, v))
                keep(detail::reduce_layout(std::move(*r)));
    return out;
}

} // namespace crosscap

#endif
