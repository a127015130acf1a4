// lwl: graph-invariant toolkit around loopy color refinement.
//
// Subcommands: compare, sweep, count, cycles, gen, decompose, bench.
// Inputs are graph6 (.g6) or edge-list files; reports go to stdout as JSON
// or CSV. Exit codes: 0 success (compare: distinguished), 1 compare only:
// not distinguished, 2 any error.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "lwl/cactus.hpp"
#include "lwl/generators.hpp"
#include "lwl/graph.hpp"
#include "lwl/oracles.hpp"
#include "lwl/paths.hpp"
#include "lwl/refine.hpp"

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kSchemaVersion = 1;

struct Config {
    int r = 1;
    int k = 3;
    int max_iters = 0;
    std::size_t budget = lwl::kDefaultPathBudget;
    std::size_t tuple_limit = 1'000'000;
    int threads = 1;
    std::string format = "json";
    std::uint64_t seed = 0;
    bool atp = false;
    bool kwl_literal = false;
    std::string method = "wl1";
    std::string out;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t env_size(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    return v ? static_cast<std::size_t>(std::stoull(v)) : fallback;
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    return v ? std::stoi(v) : fallback;
}

lwl::MethodSpec method_spec(const Config& cfg) {
    if (cfg.method == "wl1") return lwl::MethodSpec::wl1();
    if (cfg.method == "loopy") return lwl::MethodSpec::loopy(cfg.r);
    if (cfg.method == "kwl") return lwl::MethodSpec::kwl(cfg.k);
    throw CLI::ValidationError("--method must be wl1, loopy or kwl");
}

lwl::RefineOptions refine_options(const Config& cfg) {
    lwl::RefineOptions opts;
    opts.max_iters = cfg.max_iters;
    opts.atp = cfg.atp;
    opts.kwl_literal = cfg.kwl_literal;
    opts.kwl_tuple_limit = cfg.tuple_limit;
    opts.path_budget = cfg.budget;
    return opts;
}

json config_json(const Config& cfg) {
    json j;
    j["method"] = cfg.method;
    j["r"] = cfg.r;
    j["k"] = cfg.k;
    j["max_iters"] = cfg.max_iters;
    j["budget"] = cfg.budget;
    j["threads"] = cfg.threads;
    j["seed"] = cfg.seed;
    j["atp"] = cfg.atp;
    j["kwl_literal"] = cfg.kwl_literal;
    return j;
}

void emit(const Config& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << text << "\n";
}

json report_envelope(const Config& cfg, json results) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["config"] = config_json(cfg);
    j["results"] = std::move(results);
    return j;
}

// Deterministic worker pool: fn(i) fills slot i, so the merge order never
// depends on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

lwl::Graph load_single(const std::string& path) {
    auto graphs = lwl::load_graph_file(path);
    if (graphs.empty()) throw std::runtime_error(path + ": no graphs found");
    return graphs.front();
}

// ---------------------------------------------------------------- compare

int cmd_compare(const Config& cfg, const std::string& file_a, const std::string& file_b,
                const std::string& g6a, const std::string& g6b, bool trace) {
    lwl::Graph a, b;
    if (!g6a.empty() || !g6b.empty()) {
        if (g6a.empty() || g6b.empty())
            throw std::runtime_error("--g6a and --g6b must be given together");
        a = lwl::parse_graph6(g6a);
        b = lwl::parse_graph6(g6b);
    } else if (!file_b.empty()) {
        a = load_single(file_a);
        b = load_single(file_b);
    } else {
        auto graphs = lwl::load_graph_file(file_a);
        if (graphs.size() < 2)
            throw std::runtime_error(file_a + ": need two graphs for a single-file compare");
        a = graphs[0];
        b = graphs[1];
    }

    const auto spec = method_spec(cfg);
    const auto opts = refine_options(cfg);
    const auto res = lwl::compare_graphs(a, b, spec, opts);

    json out;
    out["method"] = spec.name();
    out["distinguished"] = res.distinguished;
    out["iterations"] = res.iterations;
    out["histogram_g"] = res.invariant_g;
    out["histogram_h"] = res.invariant_h;
    if (trace) {
        const auto joint = lwl::disjoint_union(a, b);
        const auto run = lwl::refine(joint, spec, opts);
        json rounds = json::array();
        for (const auto& col : run.history) {
            std::map<int, int> hist;
            for (int c : col.colors) ++hist[c];
            json row;
            row["round"] = col.round;
            row["num_colors"] = col.num_colors;
            row["histogram"] = hist;
            rounds.push_back(std::move(row));
        }
        out["trace"] = std::move(rounds);
    }
    emit(cfg, report_envelope(cfg, out).dump(2));
    return res.distinguished ? 0 : 1;
}

// ------------------------------------------------------------------ sweep

int cmd_sweep(const Config& cfg, const std::string& dataset, bool pairwise,
              const std::string& dump_fingerprints) {
    const auto t_parse = Clock::now();
    const auto graphs = lwl::load_graph_file(dataset);
    const double parse_s = seconds_since(t_parse);
    const auto spec = method_spec(cfg);
    const auto opts = refine_options(cfg);

    std::vector<std::string> prints(graphs.size());
    std::vector<double> pre_s(graphs.size(), 0.0), ref_s(graphs.size(), 0.0);
    parallel_for(graphs.size(), cfg.threads, [&](std::size_t i) {
        if (spec.kind == lwl::MethodKind::Loopy) {
            const auto t0 = Clock::now();
            const auto pn = lwl::precompute_all(graphs[i], spec.r, opts.path_budget);
            pre_s[i] = seconds_since(t0);
            const auto t1 = Clock::now();
            prints[i] = lwl::loopy_refine(graphs[i], pn, spec.r, opts).graph_invariant;
            ref_s[i] = seconds_since(t1);
        } else {
            const auto t0 = Clock::now();
            prints[i] = lwl::invariant_fingerprint(graphs[i], spec, opts);
            ref_s[i] = seconds_since(t0);
        }
    });
    double precompute_s = 0.0, refine_s = 0.0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        precompute_s += pre_s[i];
        refine_s += ref_s[i];
    }

    std::map<std::string, long long> buckets;
    for (const auto& fp : prints) ++buckets[fp];
    long long pairs = 0;
    std::vector<long long> sizes;
    for (const auto& [fp, m] : buckets) {
        pairs += m * (m - 1) / 2;
        sizes.push_back(m);
    }
    std::sort(sizes.rbegin(), sizes.rend());

    if (!dump_fingerprints.empty()) {
        std::ofstream f(dump_fingerprints, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + dump_fingerprints);
        for (const auto& [fp, m] : buckets) f << m << "\t" << fp << "\n";
    }

    json out;
    out["dataset"] = dataset;
    out["method"] = spec.name();
    out["graphs"] = graphs.size();
    out["buckets"] = buckets.size();
    out["bucket_sizes"] = sizes;
    out["indistinguishable_pairs"] = pairs;
    out["parse_seconds"] = parse_s;
    out["precompute_seconds"] = precompute_s;
    out["refine_seconds"] = refine_s;

    if (pairwise) {
        long long pw = 0;
        std::vector<std::pair<std::size_t, std::size_t>> work;
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = i + 1; j < graphs.size(); ++j) work.emplace_back(i, j);
        std::vector<char> same(work.size(), 0);
        parallel_for(work.size(), cfg.threads, [&](std::size_t w) {
            auto [i, j] = work[w];
            same[w] = !lwl::compare_graphs(graphs[i], graphs[j], spec, opts).distinguished;
        });
        for (char s : same) pw += s;
        out["pairwise_indistinguishable_pairs"] = pw;
        out["pairwise_matches_buckets"] = (pw == pairs);
    }

    if (cfg.format == "csv") {
        std::string csv =
            "dataset,method,graphs,buckets,indistinguishable_pairs,parse_seconds,"
            "precompute_seconds,refine_seconds\n";
        csv += dataset + "," + spec.name() + "," + std::to_string(graphs.size()) + "," +
               std::to_string(buckets.size()) + "," + std::to_string(pairs) + "," +
               std::to_string(parse_s) + "," + std::to_string(precompute_s) + "," +
               std::to_string(refine_s);
        emit(cfg, csv);
    } else {
        emit(cfg, report_envelope(cfg, out).dump(2));
    }
    return 0;
}

// ------------------------------------------------------------------ count

int cmd_count(const Config& cfg, const std::string& pattern_file, const std::string& host_file,
              const std::string& mode) {
    const lwl::Graph pattern = load_single(pattern_file);
    const lwl::Graph host = load_single(host_file);
    lwl::CountResult res;
    if (mode == "hom")
        res = lwl::hom_count(pattern, host);
    else if (mode == "sub")
        res = lwl::sub_count(pattern, host);
    else
        throw std::runtime_error("--mode must be hom or sub");
    emit(cfg, res.value.str());
    return 0;
}

// ----------------------------------------------------------------- cycles

int cmd_cycles(const Config& cfg, const std::string& host_file, int lmax, bool check) {
    if (lmax < 3 || lmax > lwl::kMaxPathLength + 2)
        throw std::runtime_error("--lmax must be in 3.." + std::to_string(lwl::kMaxPathLength + 2));
    const lwl::Graph host = load_single(host_file);
    const auto pn = lwl::precompute_all(host, lmax - 2, cfg.budget);

    json rows = json::array();
    for (int len = 3; len <= lmax; ++len) {
        long long total = 0;
        for (int v = 0; v < host.num_vertices(); ++v)
            total += static_cast<long long>(pn.count(v, len - 2));
        json row;
        row["cycle_len"] = len;
        row["sub_count"] = total;  // equals sub(C_len, host): both orientations, every root
        if (check) {
            const auto oracle = lwl::sub_count(lwl::gen_cycle(len), host);
            row["oracle"] = oracle.value.str();
            if (oracle.value != total)
                throw std::runtime_error("cycle table mismatch against the oracle at L=" +
                                         std::to_string(len));
        }
        rows.push_back(std::move(row));
    }
    if (cfg.format == "csv") {
        std::string csv = "cycle_len,sub_count\n";
        for (const auto& row : rows)
            csv += std::to_string(int(row["cycle_len"])) + "," +
                   std::to_string(static_cast<long long>(row["sub_count"])) + "\n";
        csv.pop_back();
        emit(cfg, csv);
    } else {
        emit(cfg, report_envelope(cfg, rows).dump(2));
    }
    return 0;
}

// -------------------------------------------------------------------- gen

int cmd_gen(const Config& cfg, const std::string& family, const std::vector<std::string>& params,
            const std::string& base_file, bool twisted) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::runtime_error("gen " + family + ": expected " + std::to_string(k) +
                                     " parameter(s)");
    };
    auto p_int = [&](std::size_t i) { return std::stoi(params.at(i)); };
    auto p_real = [&](std::size_t i) { return std::stod(params.at(i)); };

    std::vector<lwl::Graph> out;
    if (family == "cycle") {
        need(1);
        out.push_back(lwl::gen_cycle(p_int(0)));
    } else if (family == "path") {
        need(1);
        out.push_back(lwl::gen_path(p_int(0)));
    } else if (family == "complete") {
        need(1);
        out.push_back(lwl::gen_complete(p_int(0)));
    } else if (family == "chordal-pair") {
        need(1);
        auto [a, b] = lwl::gen_chordal_pair(p_int(0));
        out.push_back(a);
        out.push_back(b);
    } else if (family == "csl") {
        need(2);
        out.push_back(lwl::gen_csl(p_int(0), p_int(1)));
    } else if (family == "shrikhande") {
        need(0);
        out.push_back(lwl::gen_shrikhande());
    } else if (family == "rook44") {
        need(0);
        out.push_back(lwl::gen_rook44());
    } else if (family == "two-triangles-bridge") {
        need(0);
        out.push_back(lwl::gen_two_triangles_bridge());
    } else if (family == "cfi") {
        need(0);
        if (base_file.empty()) throw std::runtime_error("gen cfi: --base FILE required");
        out.push_back(lwl::gen_cfi(load_single(base_file), twisted));
    } else if (family == "random-cactus") {
        need(2);
        out.push_back(lwl::gen_random_cactus(p_int(0), p_int(1), cfg.seed));
    } else if (family == "fan-cactus") {
        need(3);
        out.push_back(lwl::gen_fan_cactus(p_int(0), p_int(1), p_real(2), cfg.seed).first);
    } else if (family == "gnp") {
        need(2);
        out.push_back(lwl::gen_gnp(p_int(0), p_real(1), cfg.seed));
    } else {
        throw std::runtime_error("gen: unknown family " + family);
    }

    std::string text;
    for (const auto& g : out) {
        text += lwl::write_graph6(g);
        text += "\n";
    }
    text.pop_back();
    emit(cfg, text);
    return 0;
}

// -------------------------------------------------------------- decompose

int cmd_decompose(const Config& cfg, const std::string& graph_file, int root) {
    const lwl::Graph g = load_single(graph_file);
    const auto td = lwl::canonical_tree_decomposition(g, root);
    const auto valid = lwl::validate_tree_decomposition(g, td);

    json nodes = json::array();
    for (int t = 0; t < td.tree.num_vertices(); ++t) {
        json node;
        node["id"] = t;
        node["bag"] = td.bags[static_cast<std::size_t>(t)];
        switch (td.kinds[static_cast<std::size_t>(t)]) {
            case lwl::TreeDecomposition::Gadget::Node: node["kind"] = "node"; break;
            case lwl::TreeDecomposition::Gadget::TreeEdge: node["kind"] = "tree-edge"; break;
            case lwl::TreeDecomposition::Gadget::Cycle: node["kind"] = "cycle"; break;
        }
        nodes.push_back(std::move(node));
    }
    json edges = json::array();
    for (auto [u, v] : td.tree.edges()) edges.push_back(json::array({u, v}));

    json out;
    out["nodes"] = std::move(nodes);
    out["edges"] = std::move(edges);
    out["root"] = td.root;
    out["width"] = td.width();
    out["depth"] = lwl::td_depth(td);
    out["valid"] = valid.valid;
    if (!valid.valid) out["violation"] = valid.violation;
    out["canonical_code"] = lwl::td_canonical_code(td, g);
    emit(cfg, report_envelope(cfg, out).dump(2));
    return 0;
}

// ------------------------------------------------------------------ bench

int cmd_bench(const Config& cfg, const std::string& dataset) {
    const auto graphs = lwl::load_graph_file(dataset);

    struct Row {
        int n = 0, m = 0;
        bool ok = true;
        std::size_t paths = 0;
        std::vector<std::size_t> per_q;
        double precompute_s = 0.0, refine_s = 0.0;
    };
    std::vector<Row> rows(graphs.size());

    parallel_for(graphs.size(), cfg.threads, [&](std::size_t i) {
        Row& row = rows[i];
        const lwl::Graph& g = graphs[i];
        row.n = g.num_vertices();
        row.m = g.num_edges();
        row.per_q.assign(static_cast<std::size_t>(cfg.r), 0);
        try {
            const auto t0 = Clock::now();
            const auto pn = lwl::precompute_all(g, cfg.r, cfg.budget);
            row.precompute_s = seconds_since(t0);
            row.paths = pn.total_paths();
            for (int q = 1; q <= cfg.r; ++q) {
                std::size_t total = 0;
                for (int v = 0; v < g.num_vertices(); ++v) total += pn.count(v, q);
                row.per_q[static_cast<std::size_t>(q - 1)] = total;
            }
            const auto t1 = Clock::now();
            lwl::loopy_refine(g, pn, cfg.r);
            row.refine_s = seconds_since(t1);
        } catch (const lwl::BudgetExceeded&) {
            row.ok = false;
        }
    });

    std::size_t total_paths = 0;
    long long budget_exceeded = 0;
    double total_pre = 0.0, total_ref = 0.0;
    long long total_edges = 0;
    for (const auto& row : rows) {
        if (!row.ok) {
            ++budget_exceeded;
            continue;
        }
        total_paths += row.paths;
        total_pre += row.precompute_s;
        total_ref += row.refine_s;
        total_edges += row.m;
    }

    if (cfg.format == "csv") {
        std::string csv = "idx,n,m,status,paths";
        for (int q = 1; q <= cfg.r; ++q) csv += ",paths_q" + std::to_string(q);
        csv += ",precompute_seconds,refine_seconds\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Row& row = rows[i];
            csv += std::to_string(i) + "," + std::to_string(row.n) + "," + std::to_string(row.m) +
                   "," + (row.ok ? "ok" : "budget_exceeded") + "," + std::to_string(row.paths);
            for (auto q : row.per_q) csv += "," + std::to_string(q);
            csv += "," + std::to_string(row.precompute_s) + "," + std::to_string(row.refine_s) + "\n";
        }
        if (!csv.empty()) csv.pop_back();
        emit(cfg, csv);
    } else {
        json out;
        out["dataset"] = dataset;
        out["r"] = cfg.r;
        out["graphs"] = graphs.size();
        out["budget_exceeded"] = budget_exceeded;
        out["total_paths"] = total_paths;
        out["total_edges"] = total_edges;
        out["precompute_seconds"] = total_pre;
        out["refine_seconds"] = total_ref;
        emit(cfg, report_envelope(cfg, out).dump(2));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-invariant toolkit: loopy color refinement, exact counting oracles, "
                 "graph generators and cactus tree decompositions"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    Config cfg;
    cfg.budget = env_size("LWL_BUDGET", cfg.budget);
    cfg.threads = env_int("LWL_THREADS", static_cast<int>(std::thread::hardware_concurrency()));
    if (cfg.threads <= 0) cfg.threads = 1;

    app.add_option("--budget", cfg.budget, "path enumeration budget per graph");
    app.add_option("--threads", cfg.threads, "worker threads for sweeps and benchmarks");
    app.add_option("--format", cfg.format, "output format: json or csv");
    app.add_option("--out", cfg.out, "write the report to a file instead of stdout");
    app.add_option("--seed", cfg.seed, "seed for randomized generators");

    auto add_method_options = [&](CLI::App* sub) {
        sub->add_option("--method", cfg.method, "wl1, loopy or kwl")->capture_default_str();
        sub->add_option("--r", cfg.r, "loopy order")->capture_default_str();
        sub->add_option("--k", cfg.k, "k-WL order (2 or 3)")->capture_default_str();
        sub->add_option("--max-iters", cfg.max_iters, "iteration cap (0 = until stable)");
        sub->add_flag("--atp", cfg.atp, "append adjacency-to-center bits to path tuples");
        sub->add_flag("--literal-kwl", cfg.kwl_literal, "plain WL on the tuple graph variant");
        sub->add_option("--tuple-limit", cfg.tuple_limit, "max n^k tuples for kwl");
    };

    // compare
    std::string file_a, file_b, g6a, g6b;
    bool trace = false;
    auto* compare = app.add_subcommand("compare", "compare two graphs under a refinement method");
    compare->add_option("fileA", file_a, "first graph file (or a file with two records)");
    compare->add_option("fileB", file_b, "second graph file");
    compare->add_option("--g6a", g6a, "first graph as a literal graph6 record");
    compare->add_option("--g6b", g6b, "second graph as a literal graph6 record");
    compare->add_flag("--trace", trace, "include per-iteration histograms");
    add_method_options(compare);

    // sweep
    std::string dataset;
    bool pairwise = false;
    std::string dump_fp;
    auto* sweep = app.add_subcommand("sweep", "fingerprint a dataset and count indistinguishable pairs");
    sweep->add_option("dataset", dataset, "graph6 dataset file")->required();
    sweep->add_flag("--pairwise", pairwise, "cross-check with O(N^2) pairwise comparisons");
    sweep->add_option("--dump-fingerprints", dump_fp, "write fingerprint\\tcount lines to a file");
    add_method_options(sweep);

    // count
    std::string pattern_file, host_file, mode = "hom";
    auto* count = app.add_subcommand("count", "exact homomorphism / subgraph counts");
    count->add_option("pattern", pattern_file, "pattern graph file")->required();
    count->add_option("host", host_file, "host graph file")->required();
    count->add_option("--mode", mode, "hom or sub")->capture_default_str();

    // cycles
    std::string cycles_host;
    int lmax = 8;
    bool cycles_check = false;
    auto* cycles = app.add_subcommand("cycles", "per-length cycle subgraph counts via path neighborhoods");
    cycles->add_option("host", cycles_host, "host graph file")->required();
    cycles->add_option("--lmax", lmax, "largest cycle length")->capture_default_str();
    cycles->add_flag("--check", cycles_check, "cross-check against the brute-force oracle");

    // gen
    std::string family, base_file;
    std::vector<std::string> gen_params;
    bool twisted = false;
    auto* gen = app.add_subcommand("gen", "emit generated graphs as graph6");
    gen->add_option("family", family,
                    "cycle|path|complete|chordal-pair|csl|shrikhande|rook44|"
                    "two-triangles-bridge|cfi|random-cactus|fan-cactus|gnp")
        ->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("--base", base_file, "base graph file (cfi)");
    gen->add_flag("--twisted", twisted, "twisted variant (cfi)");

    // decompose
    std::string decomp_file;
    int root = 0;
    auto* decompose = app.add_subcommand("decompose", "canonical tree decomposition of a fan cactus");
    decompose->add_option("graph", decomp_file, "graph file")->required();
    decompose->add_option("--root", root, "root vertex")->capture_default_str();

    // bench
    std::string bench_dataset;
    auto* bench = app.add_subcommand("bench", "path precomputation and refinement timings");
    bench->add_option("dataset", bench_dataset, "graph6 dataset file")->required();
    bench->add_option("--r", cfg.r, "loopy order")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compare->parsed()) return cmd_compare(cfg, file_a, file_b, g6a, g6b, trace);
        if (sweep->parsed()) return cmd_sweep(cfg, dataset, pairwise, dump_fp);
        if (count->parsed()) return cmd_count(cfg, pattern_file, host_file, mode);
        if (cycles->parsed()) return cmd_cycles(cfg, cycles_host, lmax, cycles_check);
        if (gen->parsed()) return cmd_gen(cfg, family, gen_params, base_file, twisted);
        if (decompose->parsed()) return cmd_decompose(cfg, decomp_file, root);
        if (bench->parsed()) return cmd_bench(cfg, bench_dataset);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
