#ifndef CROSSCAP_ORACLE_HPP
#define CROSSCAP_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "gauss.hpp"

namespace crosscap {

namespace detail {

inline std::vector<std::size_t> occurrences(const GaussWord& w, std::uint32_t x)
{
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < w.letters.size(); ++i)
        if (w.letters[i] == x)
            p.push_back(i);
    return p;
}

// Keeps label ids and names; only drops letters.
inline GaussWord with_letters(const GaussWord& w, std::vector<std::uint32_t> letters)
{
    GaussWord r;
    r.letters = std::move(letters);
    r.names = w.names;
    r.comma_form = w.comma_form;
    return r;
}

} // namespace detail

// x B x C -> reverse(B) C
inline GaussWord splice_minus(const GaussWord& w, std::uint32_t x)
{
    const auto p = detail::occurrences(w, x);
    if (p.size() != 2)
        throw Error("unknown label");
    std::vector<std::uint32_t> out;
    out.reserve(w.letters.size() - 2);
    for (std::size_t i = p[1] - 1; i > p[0]; --i)
        out.push_back(w.letters[i]);
    for (std::size_t i = p[1] + 1; i < w.letters.size(); ++i)
        out.push_back(w.letters[i]);
    for (std::size_t i = 0; i < p[0]; ++i)
        out.push_back(w.letters[i]);
    return detail::with_letters(w, std::move(out));
}

inline GaussWord r1_minus(const GaussWord& w, std::uint32_t x)
{
    const auto p = detail::occurrences(w, x);
    if (p.size() != 2)
        throw Error("unknown label");
    const std::size_t n = w.letters.size();
    if (p[1] != p[0] + 1 && !(p[0] == 0 && p[1] == n - 1))
        throw Error("not a kink");
    std::vector<std::uint32_t> out;
    out.reserve(n - 2);
    for (std::size_t i = 0; i < n; ++i)
        if (w.letters[i] != x)
            out.push_back(w.letters[i]);
    return detail::with_letters(w, std::move(out));
}

struct Move
{
    enum class Kind : std::uint8_t { Splice, Kink };
    Kind kind;
    std::string label;
};

struct UMinusResult
{
    int value = 0;
    std::vector<Move> witness;
};

struct UMinusOptions
{
    bool eager_r1 = true; // remove kinks before branching
};

namespace detail {

// Lexicographically least first-occurrence relabelling over rotations
// and reversal.
inline std::string word_key(const std::vector<std::uint32_t>& w)
{
    const std::size_t n = w.size();
    std::string best, cand;
    std::vector<std::uint32_t> id;
    std::uint32_t top = 0;
    for (auto x : w)
        top = std::max(top, x + 1);
    for (int dir = 0; dir < 2; ++dir)
        for (std::size_t r = 0; r < n; ++r) {
            id.assign(top, UINT32_MAX);
            cand.clear();
            std::uint32_t next = 0;
            for (std::size_t k = 0; k < n; ++k) {
                const std::uint32_t x = w[dir == 0 ? (r + k) % n : (r + n - k) % n];
                if (id[x] == UINT32_MAX)
                    id[x] = next++;
                cand.push_back(static_cast<char>(id[x]));
            }
            if (best.empty() || cand < best)
                best = cand;
        }
    return best;
}

inline std::vector<std::uint32_t> adjacent_pairs(const GaussWord& w)
{
    std::vector<std::uint32_t> out;
    const std::size_t n = w.letters.size();
    for (std::size_t i = 0; i < n; ++i)
        if (n >= 2 && w.letters[i] == w.letters[(i + 1) % n] && (n > 2 || i == 0))
            out.push_back(w.letters[i]);
    return out;
}

class UMinusSearch
{
public:
    explicit UMinusSearch(UMinusOptions opt) : opt_(opt) {}

    // Whether w reaches the empty word with at most k splices.
    bool solve(const GaussWord& w0, int k, std::vector<Move>& path)
    {
        GaussWord w = w0;
        const std::size_t mark = path.size();
        if (opt_.eager_r1) {
            for (auto kinks = adjacent_pairs(w); !kinks.empty(); kinks = adjacent_pairs(w)) {
                path.push_back({Move::Kind::Kink, w.names[kinks[0]]});
                w = r1_minus(w, kinks[0]);
            }
        }
        if (w.letters.empty())
            return true;
        const std::string key = word_key(w.letters);
        auto it = floor_.find(key);
        if (it != floor_.end() && it->second > k) {
            path.resize(mark);
            return false;
        }
        if (!opt_.eager_r1) {
            for (auto x : adjacent_pairs(w)) {
                path.push_back({Move::Kind::Kink, w.names[x]});
                if (solve(r1_minus(w, x), k, path))
                    return true;
                path.pop_back();
            }
        }
        if (k > 0) {
            std::vector<std::uint8_t> tried(w.names.size(), 0);
            for (auto x : w.letters) {
                if (tried[x]++)
                    continue;
                path.push_back({Move::Kind::Splice, w.names[x]});
                if (solve(splice_minus(w, x), k - 1, path))
                    return true;
                path.pop_back();
            }
        }
        floor_[key] = k + 1;
        path.resize(mark);
        return false;
    }

private:
    UMinusOptions opt_;
    std::unordered_map<std::string, int> floor_; // proven lower bounds
};

} // namespace detail

// Iterative deepening on the number of S- splices.
inline UMinusResult u_minus_witness(const GaussWord& w, UMinusOptions opt = {})
{
    detail::UMinusSearch search(opt);
    UMinusResult r;
    for (int k = 0;; ++k) {
        r.witness.clear();
        if (search.solve(w, k, r.witness)) {
            r.value = k;
            return r;
        }
    }
}

inline int u_minus(const GaussWord& w, UMinusOptions opt = {}) { return u_minus_witness(w, opt).value; }

inline std::string to_string(const Move& m)
{
    return (m.kind == Move::Kind::Splice ? "S- " : "RI- ") + m.label;
}

} // namespace crosscap

#endif
