// Command-line front end: construct / check / search / lemmas / certify / bench.
//
// Exit codes: 0 success, 1 a lemma or certificate check failed, 2 usage error.
// All randomness flows from one seeded generator per run; default seed is a
// fixed constant so default runs reproduce exactly.  Overridable via the
// RAINBOW_SEED and RAINBOW_THREADS environment variables.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/bitgraph.hpp"
#include "rainbow/certify.hpp"
#include "rainbow/construction.hpp"
#include "rainbow/lemmas.hpp"
#include "rainbow/search.hpp"
#include "rainbow/triangles.hpp"
#include "rainbow/triple_io.hpp"

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20200807;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RAINBOW_SEED")) return std::strtoull(env, nullptr, 10);
    return kDefaultSeed;
}

int default_threads() {
    if (const char* env = std::getenv("RAINBOW_THREADS")) return std::atoi(env);
    return static_cast<int>(std::thread::hardware_concurrency());
}

json triple_report(const rainbow::GraphTriple& t) {
    json j;
    j["n"] = t.n();
    j["edges"] = t.edge_counts();
    j["rainbow_count"] = rainbow::count_rainbow_triangles(t);
    if (auto w = rainbow::find_rainbow_triangle(t)) j["witness"] = {w->v1, w->v2, w->v3};
    return j;
}

rainbow::GraphTriple random_triple(int n, std::mt19937_64& rng) {
    rainbow::GraphBuilder b1(n), b2(n), b3(n);
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) b1.add_edge(u, v);
            if (coin(rng)) b2.add_edge(u, v);
            if (coin(rng)) b3.add_edge(u, v);
        }
    return {b1.build(), b2.build(), b3.build()};
}

int run_construct(int n, int block, const std::string& outPath) {
    rainbow::ConstructionParams params{n, block};
    rainbow::GraphTriple t = rainbow::build_construction(params);
    if (!outPath.empty()) {
        std::ofstream out(outPath);
        if (!out) {
            std::cerr << "cannot open " << outPath << " for writing\n";
            return 1;
        }
        rainbow::write_triple(out, t);
    }
    json j = triple_report(t);
    j["block"] = block;
    long long minEdges = rainbow::min_edge_count(t);
    j["min_density"] = 2.0 * minEdges / (static_cast<double>(n) * n);
    j["threshold_density"] = 2 * rainbow::constants().threshold;
    j["beats_quarter"] = 4 * minEdges > static_cast<long long>(n) * n;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_check(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 1;
    }
    rainbow::GraphTriple t = rainbow::read_triple(in);
    std::cout << triple_report(t).dump(2) << "\n";
    return 0;
}

int run_search(int n, const std::string& mode, std::uint64_t budget, std::uint64_t seed,
               std::uint64_t iterations, const std::string& init, int block, int threads,
               const std::string& csvPath) {
    std::optional<rainbow::SearchOutcome> outcome;
    if (mode == "exhaustive") {
        outcome = rainbow::exhaustive_R(n);
    } else if (mode == "bnb") {
        outcome = rainbow::branch_and_bound_R(n, {budget, threads});
    } else if (mode == "local") {
        auto li = init == "construction" ? rainbow::LocalInit::Construction
                                         : rainbow::LocalInit::Bipartite;
        outcome = rainbow::local_search_R(n, seed, iterations, li, block);
    } else {
        std::cerr << "unknown search mode: " << mode << "\n";
        return 2;
    }
    json j;
    j["n"] = outcome->n;
    j["value"] = outcome->value;
    j["exact"] = outcome->exact;
    j["nodes"] = outcome->nodesVisited;
    j["seconds"] = outcome->wallTime;
    j["seed"] = seed;
    j["witness_edges"] = outcome->witness.edge_counts();
    j["witness_rainbow_count"] = rainbow::count_rainbow_triangles(outcome->witness);
    std::cout << j.dump(2) << "\n";
    if (!csvPath.empty()) {
        std::ofstream csv(csvPath);
        csv << "n,value,exact,nodes,seconds\n";
        csv << outcome->n << "," << outcome->value << "," << (outcome->exact ? 1 : 0) << ","
            << outcome->nodesVisited << "," << outcome->wallTime << "\n";
    }
    return 0;
}

int run_lemmas(int exhaustiveMax, long long samples, std::uint64_t seed) {
    rainbow::LemmaSuiteConfig cfg;
    cfg.countExhaustiveMax = std::min(exhaustiveMax, 7);
    cfg.mantelExhaustiveMax = std::min(exhaustiveMax, 6);
    cfg.bipmanExhaustiveMax = std::min(exhaustiveMax, 5);
    auto results = rainbow::run_lemma_suite(cfg);

    // sampled extension: counting lemma on random graphs across densities
    {
        rainbow::LemmaResult r{.name = "counting lemma, sampled n <= 12"};
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pickN(1, 12);
        for (int decile = 1; decile <= 9; ++decile) {
            std::bernoulli_distribution coin(decile / 10.0);
            for (long long i = 0; i < samples; ++i) {
                int n = pickN(rng);
                rainbow::GraphBuilder b(n);
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (coin(rng)) b.add_edge(u, v);
                ++r.checked;
                if (!rainbow::check_lemma_count(b.build())) ++r.failures;
            }
        }
        results.push_back(r);
    }

    bool allPassed = true;
    for (const auto& r : results) {
        bool ok = r.passed();
        allPassed = allPassed && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << r.name << "  (checked " << r.checked
                  << ", failures " << r.failures << ")\n";
    }
    return allPassed ? 0 : 1;
}

int run_certify(int resolution, const std::string& jsonPath) {
    rainbow::Certificate cert = rainbow::certify_infeasible(resolution);
    json j;
    j["resolution"] = cert.resolution;
    j["boxes_total"] = cert.boxesTotal;
    j["boxes_excluded_by"] = {{"g1", cert.excludedBy[0]},
                              {"g2", cert.excludedBy[1]},
                              {"g3", cert.excludedBy[2]}};
    j["identity_tolerance"] = cert.identityTolerance;
    json ids = json::object();
    for (const auto& id : cert.identities.identities) ids[id.name] = id.residual;
    j["identities"] = ids;
    j["undecided"] = json::array();
    for (const auto& u : cert.undecided) {
        j["undecided"].push_back({{"a", {u.box.aLo, u.box.aHi}},
                                  {"b", {u.box.bLo, u.box.bHi}},
                                  {"c", {u.box.cLo, u.box.cHi}},
                                  {"slack_upper_bounds", u.upperBounds}});
    }
    j["complete"] = cert.complete();
    if (!jsonPath.empty()) {
        std::ofstream out(jsonPath);
        out << j.dump(2) << "\n";
    }
    std::cout << j.dump(2) << "\n";
    return (cert.complete() && cert.identities.all_within()) ? 0 : 1;
}

int run_bench(const std::vector<int>& sizes, std::uint64_t seed, const std::string& csvPath) {
    std::ostringstream csv;
    csv << "benchmark,n,items,seconds,rate_per_sec\n";
    std::mt19937_64 rng(seed);
    for (int n : sizes) {
        auto t = random_triple(n, rng);
        auto start = std::chrono::steady_clock::now();
        volatile std::uint64_t sink = rainbow::count_rainbow_triangles(t);
        (void)sink;
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        csv << "rainbow_count," << n << ",1," << secs << "," << (secs > 0 ? 1.0 / secs : 0) << "\n";
    }
    if (!sizes.empty()) {
        auto outcome = rainbow::branch_and_bound_R(5, {200000, 1});
        csv << "bnb_nodes,5," << outcome.nodesVisited << "," << outcome.wallTime << ","
            << (outcome.wallTime > 0 ? outcome.nodesVisited / outcome.wallTime : 0) << "\n";
    }
    std::cout << csv.str();
    if (!csvPath.empty()) {
        std::ofstream out(csvPath);
        out << csv.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow Mantel toolkit: extremal constructions, searches and proof checks"};
    app.require_subcommand(1);

    std::uint64_t seed = default_seed();
    int threads = default_threads();
    app.add_option("--seed", seed, "seed for all randomized subcommands");
    app.add_option("--threads", threads, "worker threads for parallel subcommands");

    // construct
    auto* construct = app.add_subcommand("construct", "build the block construction");
    int cN = 0, cBlock = 0;
    std::string cOut;
    construct->add_option("--n", cN, "total vertices")->required();
    construct->add_option("--block", cBlock, "size of each of the two blocks")->required();
    construct->add_option("--out", cOut, "write the triple in graph-triple text format");

    // check
    auto* check = app.add_subcommand("check", "report edges and rainbow count of a triple file");
    std::string checkPath;
    check->add_option("file", checkPath, "graph-triple text file")->required();

    // search
    auto* search = app.add_subcommand("search", "estimate or compute the rainbow-extremal value");
    int sN = 0, sBlock = 0;
    std::string sMode = "bnb", sInit = "bipartite", sCsv;
    std::uint64_t sBudget = 1'000'000'000, sIters = 100000;
    search->add_option("--n", sN, "vertex count")->required();
    search->add_option("--mode", sMode, "exhaustive | bnb | local");
    search->add_option("--budget", sBudget, "node budget for bnb");
    search->add_option("--iters", sIters, "iterations for local search");
    search->add_option("--init", sInit, "local search start: bipartite | construction");
    search->add_option("--block", sBlock, "block size when --init construction");
    search->add_option("--csv", sCsv, "write a CSV row: n,value,exact,nodes,seconds");

    // lemmas
    auto* lemmas = app.add_subcommand("lemmas", "machine-check the proof's lemmas");
    int lMax = 7;
    long long lSamples = 10000;
    lemmas->add_option("--exhaustive-max", lMax, "largest n for exhaustive graph sweeps");
    lemmas->add_option("--samples", lSamples, "random samples per density for sampled checks");

    // certify
    auto* certify = app.add_subcommand("certify", "box certificate for the inequality system");
    int resolution = 512;
    std::string certJson;
    certify->add_option("--resolution", resolution, "grid resolution (boxes of side 1/R)");
    certify->add_option("--json", certJson, "also write the certificate to this file");

    // bench
    auto* bench = app.add_subcommand("bench", "throughput benchmarks, CSV output");
    std::vector<int> sizes{256, 1024, 4096};
    std::string benchCsv;
    bench->add_option("--sizes", sizes, "triple sizes for counting throughput")->expected(0, -1)->delimiter(',');
    bench->add_option("--csv", benchCsv, "also write the CSV to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (construct->parsed()) return run_construct(cN, cBlock, cOut);
        if (check->parsed()) return run_check(checkPath);
        if (search->parsed())
            return run_search(sN, sMode, sBudget, seed, sIters, sInit, sBlock, threads, sCsv);
        if (lemmas->parsed()) return run_lemmas(lMax, lSamples, seed);
        if (certify->parsed()) return run_certify(resolution, certJson);
        if (bench->parsed()) return run_bench(sizes, seed, benchCsv);
    } catch (const rainbow::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
