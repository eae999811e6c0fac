#ifndef CROSSCAP_MOVES_HPP
#define CROSSCAP_MOVES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "detail/layout.hpp"
#include "keg.hpp"

namespace crosscap {

// Kind of a twist region created by a move: one crossing (whose axis is
// free), or an odd or even family of at least three and two crossings.
enum class Part : std::uint8_t { Single, Odd, Even };

constexpr Parity parity_of(Part p) noexcept { return p == Part::Even ? Parity::Even : Parity::Odd; }

constexpr Vertex part_vertex(Part p) noexcept
{
    return Vertex{parity_of(p), p == Part::Single, Strands::Parallel};
}

struct SplitChoice
{
    Parity left = Parity::Odd;
    Parity right = Parity::Odd;
    bool left_kink = false;
    bool right_kink = false;
};

// Parts of a decomposed region listed from end L of its axis.
struct Split
{
    std::array<Part, 3> parts{};
    std::uint8_t count = 0;

    static Split of(std::initializer_list<Part> ps)
    {
        Split s;
        for (Part p : ps)
            s.parts[s.count++] = p;
        return s;
    }

    Parity parity() const noexcept
    {
        Parity q = Parity::Even;
        for (std::uint8_t i = 0; i < count; ++i)
            q = q + parity_of(parts[i]);
        return q;
    }

    friend bool operator==(const Split& a, const Split& b)
    {
        if (a.count != b.count)
            return false;
        for (std::uint8_t i = 0; i < a.count; ++i)
            if (a.parts[i] != b.parts[i])
                return false;
        return true;
    }
};

namespace detail {

struct Expanded
{
    Layout lay;
    std::vector<std::size_t> edge_at;                // old edge index -> new index
    std::vector<std::array<std::size_t, 2>> gap_at;  // entering edge, cut -> connecting edge
};

// Splits the listed vertices in one pass. The first part keeps the
// vertex id; the others get fresh ids. A strand crossing the region gets
// one connecting edge per cut, directed along its travel.
inline Expanded split_vertices(const Layout& lay, const std::vector<std::pair<VertexId, Split>>& splits)
{
    Expanded x;
    const std::size_t E = lay.cycle.size();
    x.lay.vertices = lay.vertices;
    x.edge_at.resize(E);
    x.gap_at.assign(E, {SIZE_MAX, SIZE_MAX});

    std::vector<int> which(lay.vertices.size(), -1);
    std::vector<std::array<VertexId, 3>> ids(splits.size());
    for (std::size_t k = 0; k < splits.size(); ++k) {
        const auto& [v, sp] = splits[k];
        which[v] = static_cast<int>(k);
        ids[k][0] = v;
        x.lay.vertices[v] = part_vertex(sp.parts[0]);
        for (std::uint8_t j = 1; j < sp.count; ++j) {
            ids[k][j] = static_cast<VertexId>(x.lay.vertices.size());
            x.lay.vertices.push_back(part_vertex(sp.parts[j]));
        }
    }

    x.lay.cycle.reserve(E + 4 * splits.size());
    for (std::size_t i = 0; i < E; ++i) {
        PEdge e = lay.cycle[i];
        if (which[e.from] >= 0) {
            const int k = which[e.from];
            const End entered = lay.cycle[(i + E - 1) % E].to_port.end;
            e.from = entered == End::L ? ids[k][splits[k].second.count - 1] : ids[k][0];
        }
        const VertexId head = e.to;
        if (which[head] >= 0) {
            const int k = which[head];
            e.to = e.to_port.end == End::L ? ids[k][0] : ids[k][splits[k].second.count - 1];
        }
        x.edge_at[i] = x.lay.cycle.size();
        x.lay.cycle.push_back(e);
        if (which[head] < 0)
            continue;
        const int k = which[head];
        const Split& sp = splits[k].second;
        Pole s = e.to_port.side;
        if (e.to_port.end == End::L) {
            for (std::uint8_t j = 0; j + 1 < sp.count; ++j) {
                s = cross(s, parity_of(sp.parts[j]));
                x.gap_at[i][j] = x.lay.cycle.size();
                x.lay.cycle.push_back({ids[k][j], ids[k][j + 1], {s, End::R}, {s, End::L}});
            }
        } else {
            for (std::uint8_t j = sp.count - 1; j > 0; --j) {
                s = cross(s, parity_of(sp.parts[j]));
                x.gap_at[i][j - 1] = x.lay.cycle.size();
                x.lay.cycle.push_back({ids[k][j], ids[k][j - 1], {s, End::L}, {s, End::R}});
            }
        }
    }
    return x;
}

// RI+ on edge e with a fresh region of kind p closing onto itself at end R.
inline void push_kink(Layout& lay, const PEdge& e, Part p, std::vector<PEdge>& out)
{
    const VertexId k = static_cast<VertexId>(lay.vertices.size());
    lay.vertices.push_back(part_vertex(p));
    const Pole turn = cross(Pole::A, parity_of(p));
    out.push_back({e.from, k, e.from_port, {Pole::A, End::L}});
    out.push_back({k, k, {turn, End::R}, {flip(turn), End::R}});
    out.push_back({k, e.to, {Pole::B, End::L}, e.to_port});
}

// Steps 2-4: a new region P takes the strand arriving along edge a and
// the one along edge b, and the stretch between them is traversed
// backwards. Indices are into lay.cycle; a != b.
inline Layout attach(const Layout& lay, std::size_t a, std::size_t b, Part p)
{
    const std::size_t E = lay.cycle.size();
    Layout out;
    out.vertices = lay.vertices;
    const VertexId P = static_cast<VertexId>(out.vertices.size());
    out.vertices.push_back(part_vertex(p));
    const Parity q = parity_of(p);
    const PEdge& es = lay.cycle[a];
    const PEdge& eg = lay.cycle[b];
    const std::size_t mid = (b + E - a) % E - 1;
    out.cycle.reserve(E + 2);
    // with a < b the result reads prefix, α, γ, reversed middle, β, δ, suffix
    const std::size_t lead = a < b ? a : 0;
    for (std::size_t k = 0; k < lead; ++k)
        out.cycle.push_back(lay.cycle[k]);
    if (a > b)
        for (std::size_t k = b + 1; k < a; ++k)
            out.cycle.push_back(lay.cycle[k]);
    out.cycle.push_back({es.from, P, es.from_port, {Pole::A, End::L}});
    out.cycle.push_back({P, eg.from, {cross(Pole::A, q), End::R}, eg.from_port});
    for (std::size_t j = 0; j < mid; ++j)
        out.cycle.push_back(reversed(lay.cycle[(b + E - 1 - j) % E]));
    out.cycle.push_back({es.to, P, es.to_port, {Pole::B, End::L}});
    out.cycle.push_back({P, eg.to, {cross(Pole::B, q), End::R}, eg.to_port});
    if (a < b)
        for (std::size_t k = b + 1; k < E; ++k)
            out.cycle.push_back(lay.cycle[k]);
    return out;
}

} // namespace detail

inline KnotEulerGraph decompose_vertex(const KnotEulerGraph& g, VertexId v, SplitChoice s)
{
    if (!validate(g).ok())
        throw Error("not a knot Eulerian graph");
    if (v >= g.vertices.size())
        throw Error("no such vertex");
    if (s.left + s.right != g.vertices[v].parity ||
        (s.left_kink && s.left != Parity::Odd) || (s.right_kink && s.right != Parity::Odd))
        throw Error("parity violation");
    auto part = [](Parity q, bool kink) {
        return kink ? Part::Single : q == Parity::Odd ? Part::Odd : Part::Even;
    };
    const Split sp = Split::of({part(s.left, s.left_kink), part(s.right, s.right_kink)});
    return detail::settle(detail::split_vertices(detail::layout(g), {{v, sp}}).lay);
}

inline KnotEulerGraph r1_plus(const KnotEulerGraph& g, std::size_t i)
{
    if (i >= g.cycle.size())
        throw Error("edge index out of range");
    detail::Layout lay = detail::layout(g);
    std::vector<detail::PEdge> cyc;
    cyc.reserve(lay.cycle.size() + 2);
    for (std::size_t k = 0; k < lay.cycle.size(); ++k) {
        if (k == i)
            detail::push_kink(lay, lay.cycle[k], Part::Single, cyc);
        else
            cyc.push_back(lay.cycle[k]);
    }
    lay.cycle = std::move(cyc);
    return detail::settle(lay);
}

// Pairs are 0-based.
using EdgePair = std::pair<std::uint32_t, std::uint32_t>;

inline void enumerate_pairs(const KnotEulerGraph& g, std::vector<EdgePair>& out)
{
    const auto E = static_cast<std::uint32_t>(g.cycle.size());
    out.clear();
    out.reserve(E < 2 ? 0 : std::size_t{E} * (E - 1) / 2);
    for (std::uint32_t s = 0; s < E; ++s)
        for (std::uint32_t t = s + 1; t < E; ++t)
            out.emplace_back(s, t);
}

inline std::vector<EdgePair> enumerate_pairs(const KnotEulerGraph& g)
{
    std::vector<EdgePair> out;
    enumerate_pairs(g, out);
    return out;
}

// Where one end of the band lands. Edge: on a descendant of the selected
// edge itself. Gap: between two parts of the region the selected edge
// enters, on that strand or on the region's other strand.
struct Site
{
    enum class Kind : std::uint8_t { Edge, Gap };

    Kind kind = Kind::Edge;
    std::uint8_t descendant = 0; // 0 before the kink, 1 its loop, 2 after it
    Part loop = Part::Single;    // region kind of the kink when descendant is 1
    bool other_pass = false;
    std::uint8_t cut = 0;        // cuts are counted from end L

    friend bool operator==(const Site&, const Site&) = default;
};

struct BridgeVariant
{
    Site s, g;
    Part p = Part::Single;
    Split split_s; // applied to the head of e_s
    Split split_g; // applied to the head of e_g; unused when both heads coincide

    friend bool operator==(const BridgeVariant&, const BridgeVariant&) = default;
};

namespace detail {

inline Layout trivial_bridge(Part p)
{
    Layout lay;
    lay.vertices.push_back(part_vertex(p));
    const Pole out0 = cross(Pole::A, parity_of(p));
    const Pole out1 = cross(Pole::B, parity_of(p));
    lay.cycle.push_back({0, 0, {out1, End::R}, {Pole::A, End::L}});
    lay.cycle.push_back({0, 0, {out0, End::R}, {Pole::B, End::L}});
    return lay;
}

inline bool split_ok(const Vertex& v, const Split& sp)
{
    if (sp.count == 0)
        return true;
    return sp.count >= 2 && !v.kink && sp.parity() == v.parity;
}

inline bool site_ok(const Site& st, const Split& sp)
{
    if (st.descendant > 2 || (st.descendant != 1 && st.loop != Part::Single))
        return false;
    if (st.kind == Site::Kind::Edge)
        return !st.other_pass && st.cut == 0;
    return sp.count >= 2 && st.cut + 1 < sp.count;
}

// Full bridge on an already laid out graph, or nullopt for an invalid
// variant.
inline std::optional<Layout> bridge_layout(const KnotEulerGraph& g, const Layout& lay, std::size_t s,
                                           std::size_t t, const BridgeVariant& var)
{
    const std::size_t E = g.cycle.size();
    if (s >= t || t >= E)
        return std::nullopt;
    const VertexId hs = g.cycle[s].to, ht = g.cycle[t].to;
    const bool shared = hs == ht;
    if (shared && var.split_g.count != 0)
        return std::nullopt;
    const Split& sp_s = var.split_s;
    const Split& sp_t = shared ? var.split_s : var.split_g;
    if (!split_ok(g.vertices[hs], sp_s) || !split_ok(g.vertices[ht], sp_t))
        return std::nullopt;
    if (!site_ok(var.s, sp_s) || !site_ok(var.g, sp_t))
        return std::nullopt;

    // Step 0
    std::vector<std::pair<VertexId, Split>> splits;
    if (sp_s.count)
        splits.emplace_back(hs, sp_s);
    if (!shared && sp_t.count)
        splits.emplace_back(ht, sp_t);
    const Expanded x = split_vertices(lay, splits);

    auto other_entry = [&](std::size_t i) {
        const VertexId v = g.cycle[i].to;
        for (std::size_t k = 0; k < E; ++k)
            if (k != i && g.cycle[k].to == v)
                return k;
        return i;
    };
    auto locate = [&](std::size_t i, const Site& st) {
        if (st.kind == Site::Kind::Edge)
            return x.edge_at[i];
        return x.gap_at[st.other_pass ? other_entry(i) : i][st.cut];
    };
    const std::size_t ms = locate(s, var.s), mt = locate(t, var.g);
    if (ms == mt)
        return std::nullopt;

    // Step 1
    Layout ri;
    ri.vertices = x.lay.vertices;
    ri.cycle.reserve(3 * x.lay.cycle.size());
    for (std::size_t k = 0; k < x.lay.cycle.size(); ++k) {
        Part kind = Part::Single;
        if (k == ms && var.s.descendant == 1)
            kind = var.s.loop;
        else if (k == mt && var.g.descendant == 1)
            kind = var.g.loop;
        push_kink(ri, x.lay.cycle[k], kind, ri.cycle);
    }

    // Steps 2-4
    return attach(ri, 3 * ms + var.s.descendant, 3 * mt + var.g.descendant, var.p);
}

} // namespace detail

inline KnotEulerGraph bridge(const KnotEulerGraph& g, std::size_t s, std::size_t t, const BridgeVariant& var)
{
    if (!validate(g).ok())
        throw Error("not a knot Eulerian graph");
    if (g.trivial())
        return detail::settle(detail::trivial_bridge(var.p));
    if (s >= t || t >= g.cycle.size())
        throw Error("invalid edge indices");
    auto out = detail::bridge_layout(g, detail::layout(g), s, t, var);
    if (!out)
        throw Error("invalid bridge variant");
    return detail::settle(*out);
}

} // namespace crosscap

#endif
