#ifndef CROSSCAP_CROSSCAP_HPP
#define CROSSCAP_CROSSCAP_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "canonical.hpp"
#include "enumeration.hpp"
#include "gauss.hpp"
#include "projection.hpp"
#include "reduce.hpp"

namespace crosscap {

struct CrosscapResult
{
    std::optional<std::size_t> value; // empty: not found within the budget
    std::size_t searched = 0;         // highest level examined
    Code code;
    KnotEulerGraph graph;
    std::size_t crossings = 0;
    bool reduced = false;
    bool prime = false;
};

// The answer is the crosscap number only if an alternating diagram
// realises w; a bare projection cannot certify that.
inline CrosscapResult crosscap(const GaussWord& w, LevelIndex& idx, std::optional<std::size_t> max_n = {})
{
    CrosscapResult r;
    r.crossings = w.crossing_count();
    if (w.trivial())
        throw Error("empty projection");
    r.reduced = is_reduced(w);
    if (!r.reduced)
        throw Error("not reduced");
    r.prime = is_prime(w);
    if (!r.prime)
        throw Error("not prime");
    std::vector<Canonical> cands;
    for (const KnotEulerGraph& g : projection_kegs(w)) {
        Canonical c = canonicalize(reduce(g));
        if (std::none_of(cands.begin(), cands.end(), [&](const Canonical& d) { return d.code == c.code; }))
            cands.push_back(std::move(c));
    }
    r.code = cands.front().code;
    r.graph = cands.front().graph;
    const std::size_t budget = max_n.value_or(r.crossings);
    for (;;) {
        for (const Canonical& c : cands) {
            const auto n = idx.level_of(c.code);
            if (n && *n <= budget && (!r.value || *n < *r.value)) {
                r.value = n;
                r.code = c.code;
                r.graph = c.graph;
            }
        }
        if (r.value || idx.computed() >= budget ||
            (idx.computed() > 0 && idx.level(idx.computed()).empty()))
            break;
        idx.next_level();
    }
    r.searched = std::min(budget, idx.computed());
    return r;
}

inline CrosscapResult crosscap(const GaussWord& w, std::optional<std::size_t> max_n = {})
{
    LevelIndex idx;
    return crosscap(w, idx, max_n);
}

} // namespace crosscap

#endif
