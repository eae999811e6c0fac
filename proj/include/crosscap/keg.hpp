#ifndef CROSSCAP_KEG_HPP
#define CROSSCAP_KEG_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crosscap {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class Pole : std::uint8_t { A = 0, B = 1 };
enum class Parity : std::uint8_t { Odd = 0, Even = 1 };

// Direction of the second strand through a twist region relative to
// the first one, measured along the region's axis.
enum class Strands : std::uint8_t { Parallel = 0, Antiparallel = 1 };

constexpr Parity operator+(Parity a, Parity b) noexcept
{
    return a == b ? Parity::Even : Parity::Odd;
}

constexpr Pole flip(Pole p) noexcept { return p == Pole::A ? Pole::B : Pole::A; }

// Pole reached after crossing a region of parity p.
constexpr Pole cross(Pole p, Parity q) noexcept { return q == Parity::Odd ? flip(p) : p; }

using VertexId = std::uint32_t;

struct Vertex
{
    Parity parity = Parity::Odd;
    bool kink = false;                   // exactly one crossing, axis arbitrary
    Strands strands = Strands::Parallel;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge
{
    VertexId from = 0;
    VertexId to = 0;
    Pole from_pole = Pole::A;
    Pole to_pole = Pole::A;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct KnotEulerGraph
{
    std::vector<Vertex> vertices; // the id of a vertex is its index
    std::vector<Edge> cycle;

    bool trivial() const noexcept { return vertices.empty() && cycle.empty(); }
    std::size_t vertex_count() const noexcept { return vertices.size(); }
    std::size_t edge_count() const noexcept { return cycle.size(); }

    friend bool operator==(const KnotEulerGraph&, const KnotEulerGraph&) = default;
};

constexpr Edge reverse_edge(const Edge& e) noexcept
{
    return Edge{e.to, e.from, e.to_pole, e.from_pole};
}

inline KnotEulerGraph rotate(const KnotEulerGraph& g, std::size_t k)
{
    KnotEulerGraph r;
    r.vertices = g.vertices;
    const std::size_t n = g.cycle.size();
    r.cycle.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        r.cycle.push_back(g.cycle[(i + k) % n]);
    return r;
}

// Relabels vertex i as perm[i].
inline KnotEulerGraph relabel(const KnotEulerGraph& g, const std::vector<VertexId>& perm)
{
    KnotEulerGraph r;
    r.vertices.resize(g.vertices.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        r.vertices[perm[i]] = g.vertices[i];
    r.cycle = g.cycle;
    for (auto& e : r.cycle) {
        e.from = perm[e.from];
        e.to = perm[e.to];
    }
    return r;
}

// Swaps A and B on every endpoint at v.
inline KnotEulerGraph swap_poles(const KnotEulerGraph& g, VertexId v)
{
    KnotEulerGraph r = g;
    for (auto& e : r.cycle) {
        if (e.from == v)
            e.from_pole = flip(e.from_pole);
        if (e.to == v)
            e.to_pole = flip(e.to_pole);
    }
    return r;
}

struct Violation
{
    std::string invariant;
    std::string where;
};

struct ValidationReport
{
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }

    std::string to_string() const
    {
        if (ok())
            return "ok";
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty())
                s += '\n';
            s += v.invariant + " at " + v.where;
        }
        return s;
    }
};

namespace detail {

// Visits of a vertex in cycle order, each given by the index of the
// edge that enters it. Only meaningful for graphs with closed cycles
// and in/out degree 2.
inline std::vector<std::array<std::size_t, 2>> visits(const KnotEulerGraph& g)
{
    std::vector<std::array<std::size_t, 2>> v(g.vertices.size(), {SIZE_MAX, SIZE_MAX});
    for (std::size_t i = 0; i < g.cycle.size(); ++i) {
        auto& slot = v[g.cycle[i].to];
        (slot[0] == SIZE_MAX ? slot[0] : slot[1]) = i;
    }
    return v;
}

// Strand relation implied by the entry poles of an odd vertex.
constexpr Strands odd_strands(Pole first_in, Pole second_in) noexcept
{
    return first_in == second_in ? Strands::Antiparallel : Strands::Parallel;
}

} // namespace detail

inline ValidationReport validate(const KnotEulerGraph& g)
{
    ValidationReport rep;
    auto add = [&](std::string inv, std::string where) {
        rep.violations.push_back({std::move(inv), std::move(where)});
    };
    const std::size_t V = g.vertices.size();
    const std::size_t E = g.cycle.size();
    if (V == 0 && E == 0)
        return rep;

    bool ids_ok = true;
    for (std::size_t i = 0; i < E; ++i) {
        if (g.cycle[i].from >= V || g.cycle[i].to >= V) {
            add("unknown vertex", "edge " + std::to_string(i));
            ids_ok = false;
        }
    }
    if (!ids_ok)
        return rep;

    bool closed = E > 0;
    for (std::size_t i = 0; i < E; ++i) {
        if (g.cycle[i].to != g.cycle[(i + 1) % E].from) {
            add("cycle not closed", "edge " + std::to_string(i));
            closed = false;
        }
    }
    if (E != 2 * V)
        add("E ≠ 2V", "graph");

    std::vector<int> in(V, 0), out(V, 0);
    for (const auto& e : g.cycle) {
        ++out[e.from];
        ++in[e.to];
    }
    bool degrees = true;
    for (std::size_t v = 0; v < V; ++v) {
        if (in[v] != 2 || out[v] != 2) {
            add("valence ≠ 4", "vertex " + std::to_string(v));
            degrees = false;
        }
        if (g.vertices[v].kink && g.vertices[v].parity != Parity::Odd)
            add("kink parity", "vertex " + std::to_string(v));
    }
    if (!closed || !degrees)
        return rep;

    const auto vis = detail::visits(g);
    for (std::size_t v = 0; v < V; ++v) {
        const Vertex& x = g.vertices[v];
        std::array<Pole, 2> pin{}, pout{};
        for (int k = 0; k < 2; ++k) {
            const std::size_t i = vis[v][k];
            pin[k] = g.cycle[i].to_pole;
            pout[k] = g.cycle[(i + 1) % E].from_pole;
        }
        const std::string where = "vertex " + std::to_string(v);
        if (pout[0] != cross(pin[0], x.parity) || pout[1] != cross(pin[1], x.parity)) {
            add("pass parity", where);
            continue;
        }
        int on_a = 0;
        for (int k = 0; k < 2; ++k)
            on_a += (pin[k] == Pole::A) + (pout[k] == Pole::A);
        if (on_a != 2) {
            add("pole pattern", where);
            continue;
        }
        if (x.parity == Parity::Odd && x.strands != detail::odd_strands(pin[0], pin[1]))
            add("strand orientation", where);
    }
    return rep;
}

} // namespace crosscap

#endif
