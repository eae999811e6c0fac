#ifndef CROSSCAP_SERIALIZE_HPP
#define CROSSCAP_SERIALIZE_HPP

#include <charconv>
#include <string>
#include <string_view>

#include "detail/layout.hpp"
#include "keg.hpp"

// Text form: V:<count>;P:<flags>;C:(u,v,Pu,Pv)|...
// Flags: o odd, O odd single crossing, e even with antiparallel strands,
// p even with parallel strands. Odd strand relations follow from the poles.

namespace crosscap {

inline char vertex_flag(const Vertex& v)
{
    if (v.parity == Parity::Odd)
        return v.kink ? 'O' : 'o';
    return v.strands == Strands::Parallel ? 'p' : 'e';
}

inline std::string serialize(const KnotEulerGraph& g)
{
    std::string s = "V:" + std::to_string(g.vertices.size()) + ";P:";
    for (const auto& v : g.vertices)
        s += vertex_flag(v);
    s += ";C:";
    for (std::size_t i = 0; i < g.cycle.size(); ++i) {
        const Edge& e = g.cycle[i];
        if (i)
            s += '|';
        s += '(' + std::to_string(e.from) + ',' + std::to_string(e.to) + ',' +
             (e.from_pole == Pole::A ? 'A' : 'B') + ',' + (e.to_pole == Pole::A ? 'A' : 'B') + ')';
    }
    return s;
}

namespace detail {

class Reader
{
public:
    explicit Reader(std::string_view s) : s_(s) {}

    void expect(std::string_view lit)
    {
        if (s_.substr(pos_, lit.size()) != lit)
            fail();
        pos_ += lit.size();
    }

    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    bool done() const { return pos_ == s_.size(); }
    char take()
    {
        if (done())
            fail();
        return s_[pos_++];
    }

    std::uint32_t number()
    {
        std::uint32_t x = 0;
        const char* b = s_.data() + pos_;
        const auto [p, ec] = std::from_chars(b, s_.data() + s_.size(), x);
        if (ec != std::errc() || p == b || (*b == '0' && p - b > 1))
            fail();
        pos_ += static_cast<std::size_t>(p - b);
        return x;
    }

    Pole pole()
    {
        const char c = take();
        if (c != 'A' && c != 'B')
            fail();
        return c == 'A' ? Pole::A : Pole::B;
    }

    [[noreturn]] void fail() const
    {
        throw Error("malformed graph text at offset " + std::to_string(pos_));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Strand relations of odd vertices are recomputed from the poles, so
// the result is only guaranteed valid if the text describes a valid graph.
inline KnotEulerGraph parse_graph(std::string_view text)
{
    detail::Reader in(text);
    KnotEulerGraph g;
    in.expect("V:");
    const std::uint32_t V = in.number();
    in.expect(";P:");
    for (std::uint32_t i = 0; i < V; ++i) {
        Vertex v;
        switch (in.take()) {
        case 'o': break;
        case 'O': v.kink = true; break;
        case 'e': v.parity = Parity::Even; v.strands = Strands::Antiparallel; break;
        case 'p': v.parity = Parity::Even; break;
        default: in.fail();
        }
        g.vertices.push_back(v);
    }
    in.expect(";C:");
    while (!in.done()) {
        if (!g.cycle.empty())
            in.expect("|");
        Edge e;
        in.expect("(");
        e.from = in.number();
        in.expect(",");
        e.to = in.number();
        in.expect(",");
        e.from_pole = in.pole();
        in.expect(",");
        e.to_pole = in.pole();
        in.expect(")");
        if (e.from >= V || e.to >= V)
            throw Error("no such vertex");
        g.cycle.push_back(e);
    }
    const auto vis = detail::visits(g);
    for (std::size_t v = 0; v < V; ++v) {
        if (g.vertices[v].parity != Parity::Odd || vis[v][1] == SIZE_MAX)
            continue;
        g.vertices[v].strands =
            detail::odd_strands(g.cycle[vis[v][0]].to_pole, g.cycle[vis[v][1]].to_pole);
    }
    return g;
}

} // namespace crosscap

#endif
