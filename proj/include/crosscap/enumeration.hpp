#ifndef CROSSCAP_ENUMERATION_HPP
#define CROSSCAP_ENUMERATION_HPP

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "canonical.hpp"
#include "expand.hpp"
#include "serialize.hpp"

namespace crosscap {

struct EnumerationOptions
{
    unsigned workers = 1;
    std::size_t level_cap = 1'000'000; // largest admissible level
    VariantSpace space;
};

class LevelIndex
{
public:
    explicit LevelIndex(EnumerationOptions opt = {}) : opt_(std::move(opt))
    {
        const Canonical c = canonicalize(KnotEulerGraph{});
        levels_.push_back({{c.code, c.graph}});
        seen_.insert(c.code);
    }

    std::size_t computed() const noexcept { return levels_.size() - 1; }
    const GraphSet& level(std::size_t n) const { return levels_.at(n); }
    const EnumerationOptions& options() const noexcept { return opt_; }

    std::optional<std::size_t> level_of(const Code& c) const
    {
        if (!seen_.count(c))
            return std::nullopt;
        for (std::size_t n = 0; n < levels_.size(); ++n)
            if (levels_[n].count(c))
                return n;
        return std::nullopt;
    }

    // Appends a level read from storage; codes already known are dropped.
    void push_level(GraphSet lv)
    {
        for (auto it = lv.begin(); it != lv.end();) {
            if (seen_.count(it->first))
                it = lv.erase(it);
            else
                seen_.insert((it++)->first);
        }
        levels_.push_back(std::move(lv));
    }

    const GraphSet& next_level()
    {
        const GraphSet& frontier = levels_.back();
        std::vector<const KnotEulerGraph*> work;
        for (const auto& kv : frontier)
            work.push_back(&kv.second);
        std::vector<GraphSet> parts(work.size());
        std::atomic<std::size_t> cursor{0};
        auto run = [&] {
            for (std::size_t i; (i = cursor.fetch_add(1)) < work.size();) {
                GraphSet r = expand_all(*work[i], opt_.space);
                for (auto it = r.begin(); it != r.end();) {
                    if (seen_.count(it->first))
                        it = r.erase(it);
                    else
                        ++it;
                }
                parts[i] = std::move(r);
            }
        };
        const unsigned n = std::max(1u, std::min<unsigned>(opt_.workers, static_cast<unsigned>(work.size())));
        std::vector<std::thread> pool;
        for (unsigned k = 1; k < n; ++k)
            pool.emplace_back(run);
        run();
        for (auto& t : pool)
            t.join();

        GraphSet next;
        for (auto& p : parts) {
            next.merge(p);
            if (next.size() > opt_.level_cap)
                throw Error("level " + std::to_string(levels_.size()) + " exceeds the cap of " +
                            std::to_string(opt_.level_cap) + " graphs");
        }
        for (const auto& kv : next)
            seen_.insert(kv.first);
        levels_.push_back(std::move(next));
        return levels_.back();
    }

private:
    EnumerationOptions opt_;
    std::vector<GraphSet> levels_;
    std::unordered_set<Code> seen_;
};

inline const GraphSet& next_level(LevelIndex& idx) { return idx.next_level(); }

// Smallest level n <= max_n holding c, extending idx as needed.
inline std::optional<std::size_t> find_level(LevelIndex& idx, const Code& c, std::size_t max_n)
{
    for (;;) {
        if (auto n = idx.level_of(c); n && *n <= max_n)
            return n;
        if (idx.computed() >= max_n)
            return std::nullopt;
        if (idx.computed() > 0 && idx.level(idx.computed()).empty())
            return std::nullopt;
        idx.next_level();
    }
}

inline std::filesystem::path level_path(const std::filesystem::path& dir, std::size_t n)
{
    return dir / ("level_" + std::to_string(n) + ".jsonl");
}

inline void save_level(const std::filesystem::path& dir, std::size_t n, const GraphSet& lv)
{
    std::filesystem::create_directories(dir);
    const auto path = level_path(dir, n);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            throw Error("cannot write " + tmp);
        for (const auto& [code, g] : lv) {
            nlohmann::ordered_json j;
            j["code"] = to_hex(code);
            j["graph"] = serialize(g);
            out << j.dump() << '\n';
        }
    }
    std::filesystem::rename(tmp, path);
}

inline GraphSet load_level(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read " + path.string());
    GraphSet lv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto j = nlohmann::json::parse(line);
        const Code code = from_hex(j.at("code").get<std::string>());
        KnotEulerGraph g = parse_graph(j.at("graph").get<std::string>());
        if (canonical_code(g) != code)
            throw Error("code mismatch in " + path.string());
        lv.emplace(code, std::move(g));
    }
    return lv;
}

inline void save_levels(const std::filesystem::path& dir, const LevelIndex& idx)
{
    for (std::size_t n = 0; n <= idx.computed(); ++n)
        save_level(dir, n, idx.level(n));
}

// Reads level_1.jsonl, level_2.jsonl, ... while they exist.
inline void load_levels(const std::filesystem::path& dir, LevelIndex& idx)
{
    for (std::size_t n = idx.computed() + 1;; ++n) {
        const auto p = level_path(dir, n);
        if (!std::filesystem::exists(p))
            return;
        idx.push_level(load_level(p));
    }
}

} // namespace crosscap

#endif
