#ifndef CROSSCAP_PROJECTION_HPP
#define CROSSCAP_PROJECTION_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "detail/layout.hpp"
#include "gauss.hpp"
#include "keg.hpp"

namespace crosscap {

struct TwistRegionPartition
{
    // Each block lists its crossings in order along the region's axis.
    std::vector<std::vector<std::uint32_t>> blocks;

    Parity parity(std::size_t b) const { return blocks[b].size() % 2 ? Parity::Odd : Parity::Even; }
};

namespace detail {

inline bool bigon_adjacent(std::size_t n, const std::array<std::size_t, 2>& px,
                           const std::array<std::size_t, 2>& py)
{
    auto adj = [n](std::size_t a, std::size_t b) { return (a + 1) % n == b || (b + 1) % n == a; };
    return (adj(px[0], py[0]) && adj(px[1], py[1])) || (adj(px[0], py[1]) && adj(px[1], py[0]));
}

} // namespace detail

inline TwistRegionPartition twist_regions(const GaussWord& w)
{
    const std::size_t n = w.crossing_count();
    const std::size_t len = w.letters.size();
    std::vector<std::array<std::size_t, 2>> pos(n, {SIZE_MAX, SIZE_MAX});
    for (std::size_t i = 0; i < len; ++i) {
        auto& p = pos[w.letters[i]];
        (p[0] == SIZE_MAX ? p[0] : p[1]) = i;
    }
    std::vector<std::vector<std::uint32_t>> nb(n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = x + 1; y < n; ++y)
            if (detail::bigon_adjacent(len, pos[x], pos[y])) {
                nb[x].push_back(y);
                nb[y].push_back(x);
            }

    TwistRegionPartition out;
    std::vector<std::uint8_t> seen(n, 0);
    for (std::size_t i = 0; i < len; ++i) {
        const std::uint32_t root = w.letters[i];
        if (seen[root])
            continue;
        std::vector<std::uint32_t> comp{root};
        seen[root] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (auto y : nb[comp[k]])
                if (!seen[y]) {
                    seen[y] = 1;
                    comp.push_back(y);
                }
        std::size_t links = 0;
        bool low_degree = true;
        for (auto x : comp) {
            links += nb[x].size();
            low_degree = low_degree && nb[x].size() <= 2;
        }
        links /= 2;
        if (low_degree && links + 1 == comp.size()) {
            std::uint32_t cur = comp[0];
            for (auto x : comp)
                if (nb[x].size() <= 1) {
                    cur = x;
                    break;
                }
            std::vector<std::uint32_t> chain{cur};
            std::uint32_t prev = UINT32_MAX;
            while (chain.size() < comp.size()) {
                const std::uint32_t next = nb[cur][0] != prev ? nb[cur][0] : nb[cur][1];
                prev = cur;
                cur = next;
                chain.push_back(cur);
            }
            out.blocks.push_back(std::move(chain));
        } else if (low_degree && links == comp.size() && comp.size() == n) {
            // a closed ring of bigons: the (2,k) torus projection
            out.blocks.emplace_back(w.letters.begin(), w.letters.begin() + static_cast<long>(n));
        } else {
            throw Error("not a knot projection twist structure");
        }
    }
    return out;
}

namespace detail {

inline void check_projection(const GaussWord& w)
{
    if (!is_reduced(w))
        throw Error("not reduced");
    if (!is_prime(w))
        throw Error("not prime");
    if (!is_realizable(w))
        throw Error("not realizable");
}

// backwards[b] reads a one-crossing block backwards on its second visit.
inline KnotEulerGraph build_keg(const GaussWord& w, TwistRegionPartition tr, const std::vector<bool>& backwards)
{
    const std::size_t len = w.letters.size();
    std::vector<std::uint32_t> block(w.crossing_count());
    for (std::uint32_t b = 0; b < tr.blocks.size(); ++b)
        for (auto x : tr.blocks[b])
            block[x] = b;

    std::size_t start = 0;
    if (tr.blocks.size() > 1)
        while (block[w.letters[(start + len - 1) % len]] == block[w.letters[start]])
            ++start;

    struct Run
    {
        std::uint32_t block;
        Port in, out;
    };
    std::vector<Run> runs;
    std::vector<std::uint8_t> visited(tr.blocks.size(), 0);
    for (std::size_t i = 0; i < len;) {
        const std::uint32_t b = block[w.letters[(start + i) % len]];
        auto& chain = tr.blocks[b];
        const std::size_t k = chain.size();
        bool fwd = true, bwd = true;
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint32_t x = w.letters[(start + i + j) % len];
            fwd = fwd && x == chain[j];
            bwd = bwd && x == chain[k - 1 - j];
        }
        if (!fwd && !bwd)
            throw Error("not a knot projection twist structure");
        if (!visited[b] && !fwd) {
            std::reverse(chain.begin(), chain.end());
            std::swap(fwd, bwd);
        }
        const Parity q = tr.parity(b);
        Port in{Pole::A, End::L};
        if (k == 1 && backwards[b])
            fwd = false;
        if (visited[b]++) {
            if (fwd)
                in = Port{Pole::B, End::L};
            else
                in = Port{flip(cross(Pole::A, q)), End::R};
        }
        runs.push_back({b, in, detail::exit_port(in, q)});
        i += k;
    }

    detail::Layout lay;
    for (std::size_t b = 0; b < tr.blocks.size(); ++b)
        lay.vertices.push_back(Vertex{tr.parity(b), false, Strands::Parallel});
    for (std::size_t r = 0; r < runs.size(); ++r) {
        const Run& a = runs[r];
        const Run& c = runs[(r + 1) % runs.size()];
        lay.cycle.push_back({a.block, c.block, a.out, c.in});
    }
    return detail::settle(lay);
}

} // namespace detail

inline KnotEulerGraph keg_from_projection(const GaussWord& w)
{
    if (w.trivial())
        return {};
    detail::check_projection(w);
    TwistRegionPartition tr = twist_regions(w);
    const std::vector<bool> flip(tr.blocks.size(), false);
    return detail::build_keg(w, std::move(tr), flip);
}

// A one-crossing region has no strand direction, so w lies in one family
// per orientation of each such region. Returns all of them, reduced.
inline std::vector<KnotEulerGraph> projection_kegs(const GaussWord& w, std::size_t max_singles = 16)
{
    if (w.trivial())
        return {KnotEulerGraph{}};
    detail::check_projection(w);
    const TwistRegionPartition tr = twist_regions(w);
    std::vector<std::size_t> singles;
    for (std::size_t b = 0; b < tr.blocks.size(); ++b)
        if (tr.blocks[b].size() == 1)
            singles.push_back(b);
    if (singles.size() > max_singles)
        throw Error("too many one-crossing regions");
    std::vector<KnotEulerGraph> out;
    std::vector<bool> flip(tr.blocks.size(), false);
    for (std::size_t m = 0; m < (std::size_t{1} << singles.size()); ++m) {
        for (std::size_t i = 0; i < singles.size(); ++i)
            flip[singles[i]] = (m >> i) & 1;
        out.push_back(detail::build_keg(w, tr, flip));
    }
    return out;
}

// One crossing per odd region and two per even region.
inline GaussWord representative_word(const KnotEulerGraph& g)
{
    const detail::Layout lay = detail::layout(g);
    std::vector<std::uint32_t> letters;
    for (const auto& e : lay.cycle) {
        const std::uint32_t c0 = 2 * e.to, c1 = 2 * e.to + 1;
        if (g.vertices[e.to].parity == Parity::Odd) {
            letters.push_back(c0);
        } else if (e.to_port.end == detail::End::L) {
            letters.push_back(c0);
            letters.push_back(c1);
        } else {
            letters.push_back(c1);
            letters.push_back(c0);
        }
    }
    return make_word(letters);
}

inline bool is_realizable(const KnotEulerGraph& g)
{
    return g.trivial() || is_realizable(representative_word(g));
}

} // namespace crosscap

#endif
