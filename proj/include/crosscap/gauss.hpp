#ifndef CROSSCAP_GAUSS_HPP
#define CROSSCAP_GAUSS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "keg.hpp"

namespace crosscap {

// Cyclic double occurrence word. Letters are label ids numbered by first
// occurrence in the input text; names keep the original spelling.
struct GaussWord
{
    std::vector<std::uint32_t> letters;
    std::vector<std::string> names;
    bool comma_form = false;

    std::size_t crossing_count() const noexcept { return letters.size() / 2; }
    std::size_t knot_edge_count() const noexcept { return letters.size(); }
    bool trivial() const noexcept { return letters.empty(); }

    friend bool operator==(const GaussWord& a, const GaussWord& b) { return a.letters == b.letters; }
};

inline GaussWord parse_gauss(std::string_view text)
{
    GaussWord w;
    std::vector<std::string> tokens;
    if (text.find(',') != std::string_view::npos) {
        w.comma_form = true;
        std::size_t start = 0;
        for (;;) {
            const std::size_t c = text.find(',', start);
            tokens.emplace_back(text.substr(start, c == std::string_view::npos ? c : c - start));
            if (c == std::string_view::npos)
                break;
            start = c + 1;
        }
    } else {
        for (char c : text)
            tokens.emplace_back(1, c);
    }
    std::map<std::string, std::uint32_t> id;
    for (const auto& t : tokens) {
        if (t.empty() || std::any_of(t.begin(), t.end(), [](unsigned char c) { return c <= ' '; }))
            throw Error("malformed Gauss word");
        auto [it, fresh] = id.try_emplace(t, static_cast<std::uint32_t>(w.names.size()));
        if (fresh)
            w.names.push_back(t);
        w.letters.push_back(it->second);
    }
    std::vector<int> count(w.names.size(), 0);
    for (auto x : w.letters)
        ++count[x];
    for (std::size_t i = 0; i < count.size(); ++i)
        if (count[i] != 2)
            throw Error("label occurs ≠ 2 times: " + w.names[i]);
    return w;
}

inline std::string to_string(const GaussWord& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (w.comma_form && i)
            s += ',';
        s += w.names[w.letters[i]];
    }
    return s;
}

// Builds a word from label ids; ids are renumbered by first occurrence
// and named a, b, c, ... (or 1, 2, 3, ... beyond 26 labels).
inline GaussWord make_word(const std::vector<std::uint32_t>& letters)
{
    GaussWord w;
    std::map<std::uint32_t, std::uint32_t> id;
    for (auto x : letters) {
        auto [it, fresh] = id.try_emplace(x, static_cast<std::uint32_t>(id.size()));
        w.letters.push_back(it->second);
    }
    const std::size_t n = id.size();
    w.comma_form = n > 26;
    for (std::size_t i = 0; i < n; ++i)
        w.names.push_back(n > 26 ? std::to_string(i + 1) : std::string(1, static_cast<char>('a' + i)));
    std::vector<int> count(n, 0);
    for (auto x : w.letters)
        ++count[x];
    for (int c : count)
        if (c != 2)
            throw Error("label occurs ≠ 2 times");
    return w;
}

inline GaussWord canonical_form(const GaussWord& w) { return make_word(w.letters); }

namespace detail {

inline std::vector<std::size_t> partners(const std::vector<std::uint32_t>& w)
{
    std::vector<std::size_t> first(w.size(), SIZE_MAX), p(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto& f = first[w[i]];
        if (f == SIZE_MAX) {
            f = i;
        } else {
            p[i] = f;
            p[f] = i;
        }
    }
    return p;
}

// Whether positions start, start+1, ..., start+len-1 (cyclic) hold every
// occurrence of each label they contain.
inline bool closed_interval(const std::vector<std::size_t>& part, std::size_t start, std::size_t len)
{
    const std::size_t n = part.size();
    for (std::size_t k = 0; k < len; ++k) {
        const std::size_t i = (start + k) % n;
        if ((part[i] + n - start) % n >= len)
            return false;
    }
    return true;
}

} // namespace detail

inline bool is_reduced(const GaussWord& w)
{
    const auto part = detail::partners(w.letters);
    const std::size_t n = part.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = part[i];
        if (j < i)
            continue;
        if (detail::closed_interval(part, i + 1, j - i - 1) ||
            detail::closed_interval(part, (j + 1) % n, n - (j - i) - 1))
            return false;
    }
    return true;
}

inline bool is_prime(const GaussWord& w)
{
    const auto part = detail::partners(w.letters);
    const std::size_t n = part.size();
    for (std::size_t s = 0; s < n; ++s) {
        std::size_t open = 0;
        for (std::size_t len = 1; len + 2 <= n; ++len) {
            const std::size_t i = (s + len - 1) % n;
            if ((part[i] + n - s) % n < len - 1)
                --open;
            else
                ++open;
            if (open == 0 && len >= 2)
                return false;
        }
    }
    return true;
}

namespace detail {

class BitRows
{
public:
    explicit BitRows(std::size_t n) : n_(n), w_((n + 63) / 64), bits_(n * w_, 0) {}

    void set(std::size_t i, std::size_t j) { bits_[i * w_ + j / 64] |= std::uint64_t{1} << (j % 64); }
    bool test(std::size_t i, std::size_t j) const { return bits_[i * w_ + j / 64] >> (j % 64) & 1; }

    std::size_t degree(std::size_t i) const
    {
        std::size_t c = 0;
        for (std::size_t k = 0; k < w_; ++k)
            c += static_cast<std::size_t>(__builtin_popcountll(bits_[i * w_ + k]));
        return c;
    }

    std::size_t common(std::size_t i, std::size_t j) const
    {
        std::size_t c = 0;
        for (std::size_t k = 0; k < w_; ++k)
            c += static_cast<std::size_t>(__builtin_popcountll(bits_[i * w_ + k] & bits_[j * w_ + k]));
        return c;
    }

private:
    std::size_t n_, w_;
    std::vector<std::uint64_t> bits_;
};

} // namespace detail

// Planarity of a Gauss word through the interlacement graph: every vertex
// has even degree, non-interlaced pairs share an even number of
// neighbours, and the interlaced pairs sharing an even number of
// neighbours form a cut.
inline bool is_realizable(const GaussWord& w)
{
    const std::size_t n = w.crossing_count();
    if (n == 0)
        return true;
    std::vector<std::size_t> first(n, SIZE_MAX), second(n);
    for (std::size_t i = 0; i < w.letters.size(); ++i)
        (first[w.letters[i]] == SIZE_MAX ? first[w.letters[i]] : second[w.letters[i]]) = i;
    detail::BitRows g(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            const bool a = first[x] < first[y] && first[y] < second[x];
            const bool b = first[x] < second[y] && second[y] < second[x];
            if (a != b) {
                g.set(x, y);
                g.set(y, x);
            }
        }
    for (std::size_t x = 0; x < n; ++x)
        if (g.degree(x) % 2)
            return false;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (!g.test(x, y) && g.common(x, y) % 2)
                return false;
    std::vector<int> colour(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y = 0; y < n; ++y) {
                if (!g.test(x, y))
                    continue;
                const int want = colour[x] ^ (g.common(x, y) % 2 == 0 ? 1 : 0);
                if (colour[y] < 0) {
                    colour[y] = want;
                    stack.push_back(y);
                } else if (colour[y] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace crosscap

#endif
