#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <crosscap/bench.hpp>
#include <crosscap/crosscap.hpp>
#include <crosscap/oracle.hpp>
#include <crosscap/serialize.hpp>

using namespace crosscap;
namespace fs = std::filesystem;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Outcome
{
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

void gen_words(std::size_t n, std::vector<std::uint32_t>& w, std::vector<int>& cnt, std::uint32_t next,
               std::vector<std::vector<std::uint32_t>>& out)
{
    if (w.size() == 2 * n) {
        out.push_back(w);
        return;
    }
    if (next < n) {
        w.push_back(next);
        ++cnt[next];
        gen_words(n, w, cnt, next + 1, out);
        --cnt[next];
        w.pop_back();
    }
    for (std::uint32_t x = 0; x < next; ++x)
        if (cnt[x] == 1) {
            w.push_back(x);
            ++cnt[x];
            gen_words(n, w, cnt, next, out);
            --cnt[x];
            w.pop_back();
        }
}

// Reduced prime realizable words up to max_n crossings, one per rotation
// and reversal class.
std::vector<GaussWord> prime_words(std::size_t max_n)
{
    std::vector<GaussWord> out;
    std::set<std::string> seen;
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<std::vector<std::uint32_t>> all;
        std::vector<std::uint32_t> w;
        std::vector<int> cnt(n, 0);
        gen_words(n, w, cnt, 0, all);
        for (const auto& l : all) {
            if (!seen.insert(detail::word_key(l)).second)
                continue;
            GaussWord g = make_word(l);
            if (is_reduced(g) && is_prime(g) && is_realizable(g))
                out.push_back(std::move(g));
        }
    }
    return out;
}

std::string torus_word(std::size_t k)
{
    std::string s;
    for (std::size_t i = 0; i < 2 * k; ++i)
        s += static_cast<char>('a' + i % k);
    return s;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines_of(const fs::path& p)
{
    std::ifstream in(p);
    if (!in)
        throw Error("cannot read " + p.string());
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

Outcome criterion1()
{
    Outcome o;
    for (auto [text, want] : {std::pair{"", 0}, {"abcabc", 1}, {"abcdbadc", 2}}) {
        const auto t0 = clock_type::now();
        const int got = u_minus(parse_gauss(text));
        const double dt = seconds_since(t0);
        if (got != want)
            o.fail(std::string("u-(") + text + ")=" + std::to_string(got));
        if (dt >= 1.0)
            o.fail(std::string("u-(") + text + ") took " + std::to_string(dt) + " s");
    }
    return o;
}

Outcome criterion2(LevelIndex& idx)
{
    Outcome o;
    const auto t0 = clock_type::now();
    const auto words = prime_words(7);
    std::size_t n = 0;
    for (const auto& w : words) {
        const auto r = crosscap::crosscap(w, idx);
        const int u = u_minus(w);
        if (!r.value || static_cast<int>(*r.value) != u)
            o.fail(to_string(w) + ": crosscap " + (r.value ? std::to_string(*r.value) : "none") + ", u- " +
                   std::to_string(u));
        ++n;
    }
    const double dt = seconds_since(t0);
    if (dt >= 600)
        o.fail("sweep took " + std::to_string(dt) + " s");
    if (o.pass)
        o.detail = std::to_string(n) + " words in " + std::to_string(dt) + " s";
    return o;
}

Outcome criterion3()
{
    Outcome o;
    for (std::size_t k : {3, 5, 7, 9}) {
        const auto t0 = clock_type::now();
        const auto r = crosscap::crosscap(parse_gauss(torus_word(k)));
        const double dt = seconds_since(t0);
        if (r.value != 1u)
            o.fail("(2," + std::to_string(k) + ") gave " + (r.value ? std::to_string(*r.value) : "none"));
        if (dt >= 5)
            o.fail("(2," + std::to_string(k) + ") took " + std::to_string(dt) + " s");
    }
    return o;
}

Outcome criterion4(const fs::path& work)
{
    Outcome o;
    constexpr std::size_t top = 3;
    std::vector<fs::path> dirs;
    LevelIndex ref;
    for (unsigned workers : {1u, 4u}) {
        const fs::path dir = work / ("levels_w" + std::to_string(workers));
        fs::remove_all(dir);
        EnumerationOptions opt;
        opt.workers = workers;
        LevelIndex idx(opt);
        while (idx.computed() < top)
            idx.next_level();
        save_levels(dir, idx);
        dirs.push_back(dir);
        if (workers == 1)
            ref = idx;
    }
    for (std::size_t n = 0; n <= top; ++n)
        if (slurp(level_path(dirs[0], n)) != slurp(level_path(dirs[1], n)))
            o.fail("level " + std::to_string(n) + " differs between worker counts");

    if (ref.level(0).size() != 1 || !ref.level(0).begin()->second.trivial())
        o.fail("level 0 is not the trivial graph alone");
    const auto& l1 = ref.level(1);
    const Code tre = canonical_code(reduce(keg_from_projection(parse_gauss("abcabc"))));
    if (l1.size() != 1 || !l1.count(tre))
        o.fail("level 1 is not the trefoil family alone");
    for (const auto& [c, g] : l1) {
        const bool two_loops = g.vertices.size() == 1 && g.cycle.size() == 2 && g.cycle[0].from == g.cycle[0].to &&
                               g.cycle[1].from == g.cycle[1].to;
        if (!two_loops)
            o.fail("level 1 holds " + serialize(g));
    }
    if (!ref.level(2).count(canonical_code(reduce(keg_from_projection(parse_gauss("abcdbadc"))))))
        o.fail("level 2 lacks the figure-eight family");
    for (std::size_t a = 0; a <= top; ++a)
        for (std::size_t b = a + 1; b <= top; ++b)
            for (const auto& kv : ref.level(a))
                if (ref.level(b).count(kv.first))
                    o.fail("levels " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
    if (o.pass) {
        o.detail = "sizes";
        for (std::size_t n = 0; n <= top; ++n)
            o.detail += " " + std::to_string(ref.level(n).size());
    }
    return o;
}

Outcome criterion5(const fs::path& work)
{
    Outcome o;
    const auto t0 = clock_type::now();
    const auto rep = bench({32, 64, 128, 256, 512}, 5);
    const double dt = seconds_since(t0);
    std::ofstream csv(work / "bench.csv");
    write_csv(csv, rep);
    auto check = [&](const char* name, const std::optional<double>& x, double lo, double hi) {
        if (!x || *x < lo || *x > hi)
            o.fail(std::string(name) + " exponent " + (x ? std::to_string(*x) : "n/a"));
    };
    check("pairs", rep.pairs_exponent, 1.7, 2.3);
    check("bridge", rep.bridge_exponent, 0.7, 1.3);
    check("sweep", rep.sweep_exponent, 2.6, 3.3);
    if (dt >= 900)
        o.fail("bench took " + std::to_string(dt) + " s");
    std::ostringstream s;
    s << "pairs " << rep.pairs_exponent.value_or(0) << ", bridge " << rep.bridge_exponent.value_or(0) << ", sweep "
      << rep.sweep_exponent.value_or(0) << ", " << dt << " s";
    o.detail = o.pass ? s.str() : o.detail + " (" + s.str() + ")";
    return o;
}

Outcome criterion6()
{
    Outcome o;
    const std::string cmd = std::string("\"") + PROPERTY_BINARY + "\" --gtest_brief=1";
    const int rc = std::system(cmd.c_str());
    if (rc != 0)
        o.fail("property suite exited with " + std::to_string(rc));
    return o;
}

Outcome criterion7()
{
    Outcome o;
    const fs::path data = TEST_DATA_DIR;
    std::size_t words = 0, graphs = 0;
    for (const auto& line : lines_of(data / "gauss_words.txt")) {
        if (to_string(parse_gauss(line)) != line)
            o.fail("word " + line);
        ++words;
    }
    for (const auto& line : lines_of(data / "graphs.txt")) {
        const auto g = parse_graph(line);
        if (serialize(g) != line || parse_graph(serialize(g)) != g)
            o.fail("graph " + line);
        ++graphs;
    }
    if (o.pass)
        o.detail = std::to_string(words) + " words, " + std::to_string(graphs) + " graphs";
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    fs::path work = fs::temp_directory_path() / "crosscap_acceptance";
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--work")
            work = argv[i + 1];
    fs::create_directories(work);

    LevelIndex idx;
    const std::vector<std::function<Outcome()>> checks{
        criterion1,
        [&] { return criterion2(idx); },
        criterion3,
        [&] { return criterion4(work); },
        [&] { return criterion5(work); },
        criterion6,
        criterion7,
    };
    bool all = true;
    for (std::size_t k = 0; k < checks.size(); ++k) {
        Outcome o;
        const auto t0 = clock_type::now();
        try {
            o = checks[k]();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double dt = seconds_since(t0);
        std::cout << "criterion " << k + 1 << ": " << (o.pass ? "PASS" : "FAIL");
        if (!o.detail.empty())
            std::cout << " (" << o.detail << ")";
        std::cout << " [" << dt << " s]" << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
