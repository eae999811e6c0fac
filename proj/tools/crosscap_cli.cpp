#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <crosscap/bench.hpp>
#include <crosscap/crosscap.hpp>
#include <crosscap/enumeration.hpp>
#include <crosscap/oracle.hpp>
#include <crosscap/serialize.hpp>

namespace {

enum Status : int { computed = 0, invalid_input = 1, over_budget = 2 };

int run_enumerate(std::size_t max_level, const std::string& out, unsigned workers, std::size_t cap)
{
    crosscap::EnumerationOptions opt;
    opt.workers = workers;
    opt.level_cap = cap;
    crosscap::LevelIndex idx(opt);
    crosscap::load_levels(out, idx);
    if (idx.computed() > 0)
        std::cout << "resuming after level " << idx.computed() << '\n';
    crosscap::save_level(out, 0, idx.level(0));
    while (idx.computed() < max_level) {
        const auto& lv = idx.next_level();
        crosscap::save_level(out, idx.computed(), lv);
        std::cout << "level " << idx.computed() << ": " << lv.size() << " families\n";
    }
    return computed;
}

int run_crosscap(const std::string& word, std::optional<std::size_t> max_level, const std::string& levels,
                 unsigned workers)
{
    const crosscap::GaussWord w = crosscap::parse_gauss(word);
    crosscap::EnumerationOptions opt;
    opt.workers = workers;
    crosscap::LevelIndex idx(opt);
    if (!levels.empty())
        crosscap::load_levels(levels, idx);
    const crosscap::CrosscapResult r = crosscap::crosscap(w, idx, max_level);
    if (r.value)
        std::cout << "C(K)=" << *r.value << '\n';
    else
        std::cout << "C(K) exceeds search budget " << r.searched << '\n';
    std::cout << "crossings: " << r.crossings << '\n'
              << "twist regions: " << crosscap::twist_regions(w).blocks.size() << '\n'
              << "reduced: " << (r.reduced ? "yes" : "no") << '\n'
              << "prime: " << (r.prime ? "yes" : "no") << '\n'
              << "levels searched: " << r.searched << '\n'
              << "code: " << crosscap::to_hex(r.code) << '\n'
              << "graph: " << crosscap::serialize(r.graph) << '\n';
    return r.value ? computed : over_budget;
}

int run_oracle(const std::string& word)
{
    const auto r = crosscap::u_minus_witness(crosscap::parse_gauss(word));
    std::cout << r.value << '\n';
    std::string line;
    for (const auto& m : r.witness) {
        if (!line.empty())
            line += ", ";
        line += crosscap::to_string(m);
    }
    std::cout << (line.empty() ? "(none)" : line) << '\n';
    return computed;
}

int run_validate(const std::vector<std::string>& graphs, const std::string& file)
{
    std::vector<std::string> items = graphs;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in)
            throw crosscap::Error("cannot read " + file);
        for (std::string line; std::getline(in, line);)
            if (!line.empty())
                items.push_back(line);
    }
    int status = computed;
    for (const auto& text : items) {
        const auto rep = crosscap::validate(crosscap::parse_graph(text));
        if (rep.ok()) {
            std::cout << "ok\n";
        } else {
            std::cout << "invalid: " << rep.to_string() << '\n';
            status = invalid_input;
        }
    }
    return status;
}

std::vector<std::size_t> bench_sizes(std::size_t lo, std::size_t hi, std::size_t steps)
{
    if (lo < 2 || hi < lo || steps == 0)
        throw crosscap::Error("bad bench range");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < steps; ++i) {
        const double f = steps == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(steps - 1);
        const double e = static_cast<double>(lo) * std::pow(static_cast<double>(hi) / static_cast<double>(lo), f);
        out.push_back(std::max<std::size_t>(2, 2 * static_cast<std::size_t>(std::llround(e / 2))));
    }
    return out;
}

void print_exponent(const char* name, const std::optional<double>& x)
{
    std::cout << name << " exponent: ";
    if (x)
        std::cout << *x << '\n';
    else
        std::cout << "n/a\n";
}

int run_bench(std::size_t lo, std::size_t hi, std::size_t steps, int repeats, const std::string& csv)
{
    const auto rep = crosscap::bench(bench_sizes(lo, hi, steps), repeats);
    for (const auto& s : rep.samples)
        std::cout << "E=" << s.edges << " pairs " << s.t_pairs_ns << " ns, bridge " << s.t_bridge_ns
                  << " ns, sweep " << s.t_sweep_ns << " ns\n";
    print_exponent("pairs", rep.pairs_exponent);
    print_exponent("bridge", rep.bridge_exponent);
    print_exponent("sweep", rep.sweep_exponent);
    std::cout << "note: " << rep.note << '\n';
    if (!csv.empty()) {
        std::ofstream out(csv);
        if (!out)
            throw crosscap::Error("cannot write " + csv);
        crosscap::write_csv(out, rep);
    }
    return computed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Crosscap numbers of prime alternating knots"};
    app.require_subcommand(1);

    auto* en = app.add_subcommand("enumerate", "compute level files");
    std::size_t en_max = 3, en_cap = 1'000'000;
    std::string en_out = "levels";
    unsigned workers = 1;
    en->add_option("--max-level", en_max, "highest level")->required();
    en->add_option("--out", en_out, "output directory")->required();
    en->add_option("--workers", workers, "worker threads");
    en->add_option("--cap", en_cap, "largest admissible level size");

    auto* cc = app.add_subcommand("crosscap", "crosscap number of a Gauss word");
    std::string cc_word, cc_levels;
    std::optional<std::size_t> cc_max;
    cc->add_option("word", cc_word, "Gauss word")->required();
    cc->add_option("--max-level", cc_max, "search budget (default: crossing count)");
    cc->add_option("--levels", cc_levels, "directory of precomputed level files");
    cc->add_option("--workers", workers, "worker threads");

    auto* orc = app.add_subcommand("oracle", "splice-unknotting number by exhaustive search");
    std::string orc_word;
    orc->add_option("word", orc_word, "Gauss word")->required();

    auto* val = app.add_subcommand("validate", "check serialized graphs");
    std::vector<std::string> val_graphs;
    std::string val_file;
    val->add_option("graph", val_graphs, "serialized graphs");
    val->add_option("--file", val_file, "one serialized graph per line");

    auto* be = app.add_subcommand("bench", "scaling of pair selection and bridging");
    std::size_t emin = 32, emax = 512, steps = 5;
    int repeats = 5;
    std::string csv;
    be->add_option("--emin", emin, "smallest edge count");
    be->add_option("--emax", emax, "largest edge count");
    be->add_option("--steps", steps, "number of sizes");
    be->add_option("--repeats", repeats, "timed repeats per size");
    be->add_option("--csv", csv, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : invalid_input;
    }

    try {
        if (*en)
            return run_enumerate(en_max, en_out, workers, en_cap);
        if (*cc)
            return run_crosscap(cc_word, cc_max, cc_levels, workers);
        if (*orc)
            return run_oracle(orc_word);
        if (*val)
            return run_validate(val_graphs, val_file);
        if (*be)
            return run_bench(emin, emax, steps, repeats, csv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return invalid_input;
    }
    return invalid_input;
}
