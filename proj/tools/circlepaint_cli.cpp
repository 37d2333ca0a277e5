// circlepaint -- command-line front end.
//
// Every command writes exactly one JSON document to standard output; all
// human-readable notes go to standard error, so output can be piped safely.
// Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 internal
// invariant violation. Set CIRCLEPAINT_LOG=info|debug (or 1|2) for extra
// progress notes on standard error.

#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "circlepaint/core.hpp"
#include "circlepaint/dominance.hpp"
#include "circlepaint/errors.hpp"
#include "circlepaint/json_io.hpp"
#include "circlepaint/lowerbound.hpp"
#include "circlepaint/oracle.hpp"
#include "circlepaint/pillar.hpp"
#include "circlepaint/solver.hpp"
#include "json.hpp"

namespace cp = circlepaint;
using json = nlohmann::ordered_json;

namespace {

int log_level() {
    static const int level = [] {
        const char* env = std::getenv("CIRCLEPAINT_LOG");
        if (env == nullptr || *env == '\0') return 0;
        const std::string v(env);
        if (v == "debug") return 2;
        if (v == "info") return 1;
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        return (end != env && *end == '\0') ? static_cast<int>(n) : 1;
    }();
    return level;
}

#define LOG(lvl)              \
    if (log_level() < (lvl)) { \
    } else                     \
        std::cerr

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cp::InvalidInput("cannot open \"" + path + '"');
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::shared_ptr<const cp::IntervalSystem> load_system(const std::string& path) {
    auto sys = std::make_shared<const cp::IntervalSystem>(
        cp::load_system_json(read_file(path)));
    LOG(1) << "loaded " << sys->size() << " intervals from " << path << '\n';
    return sys;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

// ------------------------------------------------------------- subcommands

int run_color(const std::string& input, bool assert_bounds) {
    auto sys = load_system(input);
    const auto t0 = Clock::now();
    const cp::ColouringResult res =
        cp::colour(sys, cp::SolveOptions{.paranoid = assert_bounds});
    const double dt = seconds_since(t0);
    std::cout << cp::colouring_json(*sys, res, /*with_stats=*/true) << '\n';
    std::cerr << "m=" << sys->size() << " omega=" << res.stats.omega
              << " colors=" << res.chi_used << " bound=" << res.stats.bound
              << "  (" << dt * 1e3 << " ms)\n";
    return 0;
}

int run_omega(const std::string& input) {
    auto sys = load_system(input);
    const cp::CliqueResult cl = cp::omega(*sys);
    json witness = json::array();
    for (int idx : cl.witness) witness.push_back((*sys)[idx].id);
    emit({{"omega", cl.omega}, {"witness", std::move(witness)}});
    std::cerr << "omega=" << cl.omega << '\n';
    return 0;
}

int run_verify(const std::string& input, const std::string& colours_path) {
    auto sys = load_system(input);
    const std::vector<int> colours =
        cp::load_colours_json(*sys, read_file(colours_path));
    const cp::ColouringCheck check = cp::verify_colouring(*sys, colours);
    emit({{"proper", check.proper},
          {"complete", check.complete},
          {"ok", check.ok()},
          {"violations", check.violations}});
    std::cerr << (check.ok() ? "colouring accepted\n" : "colouring REJECTED\n");
    return check.ok() ? 0 : 1;
}

int run_exact_chi(const std::string& input, long long budget) {
    auto sys = load_system(input);
    const cp::Graph g = cp::overlap_graph(*sys);
    const int clique = cp::omega(*sys).omega;
    try {
        const auto t0 = Clock::now();
        const int chi = cp::exact_chi(g, budget, clique);
        std::cerr << "chi=" << chi << "  (" << seconds_since(t0) * 1e3
                  << " ms)\n";
        emit({{"chi", chi}});
    } catch (const cp::Exhausted& e) {
        std::cerr << e.what() << '\n';
        emit({{"exhausted", true}, {"budget", budget}});
    }
    return 0;
}

int run_gen_lower(int n, int omega, bool do_verify, long long brute_limit) {
    const cp::ChordDiagram d = cp::lower_bound_diagram(n, omega);
    json doc;
    doc["diagram"] = json::parse(cp::save_diagram_json(d));
    if (do_verify) {
        const cp::LowerBoundReport rep =
            cp::verify_lower_bound_instance(n, omega, brute_limit);
        doc["report"] = json::parse(cp::report_json(rep));
        std::cerr << "chords=" << rep.chord_count
                  << " clique=" << rep.clique_checked
                  << " stable=" << rep.stable_checked << '\n';
    }
    emit(doc);
    return 0;
}

int run_gen_random(int m, std::uint64_t seed) {
    std::cout << cp::save_system_json(cp::random_system(m, seed)) << '\n';
    return 0;
}

int run_bench(const std::vector<int>& sizes, int seeds) {
    json rows = json::array();
    std::cerr << "      m  seed   omega  colors   bound   seconds\n";
    for (int m : sizes) {
        for (int seed = 1; seed <= seeds; ++seed) {
            auto sys = std::make_shared<const cp::IntervalSystem>(
                cp::random_system(m, static_cast<std::uint64_t>(seed)));
            const auto t0 = Clock::now();
            const cp::ColouringResult res = cp::colour(sys);
            const double dt = seconds_since(t0);
            rows.push_back({{"m", m},
                            {"seed", seed},
                            {"omega", res.stats.omega},
                            {"colors_used", res.chi_used},
                            {"bound", res.stats.bound},
                            {"seconds", dt}});
            std::fprintf(stderr, "%7d %5d %7d %7d %7d %9.3f\n", m, seed,
                         res.stats.omega, res.chi_used, res.stats.bound, dt);
        }
    }
    emit({{"results", std::move(rows)}});
    return 0;
}

// Built-in regression check against two hand-traceable systems; the expected
// numbers are frozen copies of the worked traces in tests/fixtures.hpp.
int run_selftest() {
    std::vector<std::string> failures;
    const auto expect = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };

    // Five mutually interleaved intervals, coloured at their common gap 5.
    auto five = std::make_shared<const cp::IntervalSystem>(cp::canonicalize(
        {{"A", -5, 2}, {"B", -4, 4}, {"C", -3, 3}, {"D", -2, 1}, {"E", -1, 5}}));
    const std::map<std::string, int> five_expected{
        {"A", 1}, {"B", 2}, {"C", 2}, {"D", 1}, {"E", 3}};
    std::vector<int> members(static_cast<size_t>(five->size()));
    for (int i = 0; i < five->size(); ++i) members[static_cast<size_t>(i)] = i;
    const std::vector<int> phi =
        cp::permutation_colouring(*five, members, 5, {1, 2, 3});
    json five_colours = json::object();
    for (int i = 0; i < five->size(); ++i) {
        const std::string& id = (*five)[i].id;
        five_colours[id] = phi[static_cast<size_t>(i)];
        expect(phi[static_cast<size_t>(i)] == five_expected.at(id),
               "permutation demo: colour of " + id);
    }

    // Eleven intervals coloured by five pillars at gaps 4, 21, 7, 13, 17.
    auto eleven = std::make_shared<const cp::IntervalSystem>(cp::canonicalize(
        {{"I1", -7.0, -1.0},  {"I2", -6.25, -3.5}, {"I3", -5.5, -2.5},
         {"I4", -4.75, -1.5}, {"I5", -3.0, 0.0},   {"I6", -0.5, 6.25},
         {"I7", 0.5, 2.25},   {"I8", 1.25, 4.0},   {"I9", 2.75, 4.75},
         {"I10", 3.5, 5.25},  {"I11", 5.75, 7.0}}));
    const cp::PillarState state =
        cp::build_colouring(eleven, {4, 21, 7, 13, 17});
    const std::vector<std::vector<int>> sets_expected{
        {1, 2, 3}, {4}, {5}, {2, 6}, {1, 3}};
    expect(state.colour_sets() == sets_expected, "pillar demo: colour sets");
    const std::map<std::string, int> eleven_expected{
        {"I1", 1}, {"I2", 1}, {"I3", 2}, {"I4", 3},  {"I5", 5}, {"I6", 2},
        {"I7", 2}, {"I8", 6}, {"I9", 1}, {"I10", 3}, {"I11", 4}};
    json eleven_colours = json::object();
    for (int i = 0; i < eleven->size(); ++i) {
        const std::string& id = (*eleven)[i].id;
        eleven_colours[id] = state.colour_of(i);
        expect(state.colour_of(i) == eleven_expected.at(id),
               "pillar demo: colour of " + id);
    }
    expect(state.is_complete(), "pillar demo: completeness");
    expect(state.chi_used() == 6, "pillar demo: six colours");
    expect(state.degree({7, 13}) == 5, "pillar demo: degree of stretch (7,13)");

    // The full solver on the same system, checked by the independent verifier.
    const cp::ColouringResult solved = cp::colour(eleven);
    const cp::ColouringCheck check =
        cp::verify_colouring(*eleven, solved.colours);
    expect(check.ok(), "solver: verifier accepts");
    expect(solved.chi_used <= solved.stats.bound, "solver: within bound");

    emit({{"permutation_demo", {{"colors", std::move(five_colours)}}},
          {"pillar_demo",
           {{"colour_sets", sets_expected},
            {"colors", std::move(eleven_colours)},
            {"chi_used", state.chi_used()}}},
          {"solver",
           {{"colors_used", solved.chi_used},
            {"bound", solved.stats.bound},
            {"verified", check.ok()}}},
          {"failures", failures},
          {"ok", failures.empty()}});
    if (!failures.empty()) {
        for (const std::string& f : failures) std::cerr << "FAIL " << f << '\n';
        return 3;
    }
    std::cerr << "selftest ok\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circlepaint: colour circle graphs given as interval systems"};
    app.require_subcommand(1);

    std::string input, colours_path;
    bool assert_bounds = false;
    auto* color = app.add_subcommand("color", "colour a system within the bound");
    color->add_option("--input", input, "system JSON file")->required();
    color->add_flag("--assert-bounds", assert_bounds,
                    "recheck every structural invariant after each step");

    auto* om = app.add_subcommand("omega", "clique number with a witness");
    om->add_option("--input", input, "system JSON file")->required();

    auto* verify = app.add_subcommand("verify", "check a colouring");
    verify->add_option("--input", input, "system JSON file")->required();
    verify->add_option("--colors", colours_path, "colouring JSON file")
        ->required();

    long long budget = 10'000'000;
    auto* exact = app.add_subcommand("exact-chi", "exact chromatic number");
    exact->add_option("--input", input, "system JSON file")->required();
    exact->add_option("--budget", budget, "search node budget");

    int gn = 0, gw = 0;
    bool gverify = false;
    long long brute_limit = 64;
    auto* glow = app.add_subcommand("gen-lower",
                                    "chord diagram with chromatic number far "
                                    "above its clique number");
    glow->add_option("--n", gn, "cycle length")->required();
    glow->add_option("--omega", gw, "clique number target")->required();
    glow->add_flag("--verify", gverify, "verify the structural claims");
    glow->add_option("--brute-limit", brute_limit,
                     "max expanded chords for brute-force checks");

    int rm = 0;
    std::uint64_t seed = 1;
    auto* grand = app.add_subcommand("gen-random", "random interval system");
    grand->add_option("--m", rm, "number of intervals")->required();
    grand->add_option("--seed", seed, "PRNG seed");

    auto* self = app.add_subcommand("selftest", "built-in regression check");
    (void)self;

    std::vector<int> sizes{1000, 10000};
    int seeds = 3;
    auto* bench = app.add_subcommand("bench", "runtime and colours-used table");
    bench->add_option("--sizes", sizes, "instance sizes")->delimiter(',');
    bench->add_option("--seeds", seeds, "seeds per size");

    try {
        app.parse(argc, argv);
        if (color->parsed()) return run_color(input, assert_bounds);
        if (om->parsed()) return run_omega(input);
        if (verify->parsed()) return run_verify(input, colours_path);
        if (exact->parsed()) return run_exact_chi(input, budget);
        if (glow->parsed()) return run_gen_lower(gn, gw, gverify, brute_limit);
        if (grand->parsed()) return run_gen_random(rm, seed);
        if (self->parsed()) return run_selftest();
        if (bench->parsed()) return run_bench(sizes, seeds);
        return 2;  // unreachable: require_subcommand
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const cp::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const cp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 3;
    }
}
