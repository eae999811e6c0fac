#ifndef CROSSCAP_BENCH_HPP
#define CROSSCAP_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "keg.hpp"
#include "moves.hpp"

namespace crosscap {

// The two-loop odd vertex followed by kinks on the last edge.
inline KnotEulerGraph make_test_graph(std::size_t edges)
{
    if (edges < 2 || edges % 2)
        throw Error("edge target must be even and at least 2");
    KnotEulerGraph g;
    g.vertices.push_back(Vertex{});
    g.cycle = {Edge{0, 0, Pole::A, Pole::A}, Edge{0, 0, Pole::B, Pole::B}};
    while (g.cycle.size() < edges)
        g = r1_plus(g, g.cycle.size() - 1);
    return g;
}

struct Sample
{
    std::size_t edges = 0;
    double t_pairs_ns = 0;
    double t_bridge_ns = 0;
    double t_sweep_ns = 0;
};

struct ScalingReport
{
    std::vector<Sample> samples;
    std::optional<double> pairs_exponent;
    std::optional<double> bridge_exponent;
    std::optional<double> sweep_exponent;
    std::string note;
};

// Least squares slope of log y against log x.
inline std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = x.size();
    if (n < 2)
        return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::log(x[i]), b = std::log(y[i]);
        sx += a;
        sy += b;
        sxx += a * a;
        sxy += a * b;
    }
    const double d = n * sxx - sx * sx;
    if (d == 0)
        return std::nullopt;
    return (n * sxy - sx * sy) / d;
}

namespace detail {

using bench_clock = std::chrono::steady_clock;

// Repeated timing of one operation; each round runs it often enough to
// span min_ns and the fastest round wins.
class Timed
{
public:
    template <class F>
    Timed(F f, double min_ns) : f_(std::move(f))
    {
        double t = round(); // warm-up
        while (t < min_ns && calls_ < (std::size_t{1} << 30)) {
            calls_ *= 2;
            t = round();
        }
        best_ = t / static_cast<double>(calls_);
    }

    void again() { best_ = std::min(best_, round() / static_cast<double>(calls_)); }
    double best_ns() const noexcept { return best_; }

private:
    double round()
    {
        const auto t0 = bench_clock::now();
        for (std::size_t i = 0; i < calls_; ++i)
            f_();
        return std::chrono::duration<double, std::nano>(bench_clock::now() - t0).count();
    }

    std::function<void()> f_;
    std::size_t calls_ = 1;
    double best_ = 0;
};

template <class T>
inline void keep_alive(const T& x)
{
    asm volatile("" : : "g"(&x) : "memory");
}

} // namespace detail

// The band used by every timed bridge: plain edge sites, single crossing.
inline BridgeVariant bench_variant() { return BridgeVariant{}; }

namespace detail {

struct SizeTimers
{
    std::size_t edges;
    std::vector<Timed> ops;
};

inline SizeTimers size_timers(std::size_t edges)
{
    auto g = std::make_shared<const KnotEulerGraph>(make_test_graph(edges));
    auto buf = std::make_shared<std::vector<EdgePair>>();
    const BridgeVariant var = bench_variant();
    const std::size_t s = edges / 4, t = edges / 2 + edges / 4;
    SizeTimers out{edges, {}};
    out.ops.emplace_back(
        [g, buf] {
            enumerate_pairs(*g, *buf);
            keep_alive(*buf);
        },
        1e7);
    out.ops.emplace_back(
        [g, s, t, var] {
            auto r = bridge(*g, s, t, var);
            keep_alive(r);
        },
        1e7);
    out.ops.emplace_back(
        [g, var] {
            for (const auto& [a, b] : enumerate_pairs(*g)) {
                auto r = bridge(*g, a, b, var);
                keep_alive(r);
            }
        },
        1e7);
    return out;
}

} // namespace detail

// Sizes are timed round-robin so slow drift in machine speed hits every
// size alike.
inline ScalingReport bench(std::vector<std::size_t> sizes, int repeats)
{
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    std::vector<detail::SizeTimers> timers;
    for (std::size_t e : sizes)
        timers.push_back(detail::size_timers(e));
    for (int r = 0; r < repeats; ++r)
        for (auto& st : timers)
            for (auto& op : st.ops)
                op.again();

    ScalingReport rep;
    std::vector<double> x, a, b, c;
    for (const auto& st : timers) {
        Sample s{st.edges, st.ops[0].best_ns(), st.ops[1].best_ns(), st.ops[2].best_ns()};
        rep.samples.push_back(s);
        x.push_back(static_cast<double>(s.edges));
        a.push_back(s.t_pairs_ns);
        b.push_back(s.t_bridge_ns);
        c.push_back(s.t_sweep_ns);
    }
    rep.pairs_exponent = loglog_slope(x, a);
    rep.bridge_exponent = loglog_slope(x, b);
    rep.sweep_exponent = loglog_slope(x, c);
    rep.note = "single thread";
    if (rep.samples.size() < 2)
        rep.note += "; insufficient points";
    return rep;
}

inline void write_csv(std::ostream& out, const ScalingReport& rep)
{
    out << "E,t_pairs_ns,t_bridge_ns,t_sweep_ns\n";
    for (const auto& s : rep.samples)
        out << s.edges << ',' << static_cast<std::uint64_t>(s.t_pairs_ns) << ','
            << static_cast<std::uint64_t>(s.t_bridge_ns) << ',' << static_cast<std::uint64_t>(s.t_sweep_ns)
            << '\n';
}

} // namespace crosscap

#endif
