#include "doctest.h"

#include <algorithm>
#include <map>
#include <string>

#include "lwl/generators.hpp"
#include "lwl/paths.hpp"
#include "lwl/refine.hpp"

using namespace lwl;

namespace {

// Deliberately naive reference implementation of the loopy update: string
// signatures, per-vertex path sets re-enumerated from scratch each round,
// no interning tricks. Only the distinguish-verdict is compared against
// the engine.
std::map<std::string, int> naive_loopy_histograms(const Graph& joint, int r, int split,
                                                  std::map<std::string, int>& right) {
    const int n = joint.num_vertices();
    std::vector<std::string> color(static_cast<std::size_t>(n), "i");
    std::vector<std::vector<std::vector<std::vector<int>>>> paths(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int q = 1; q <= r; ++q) paths[static_cast<std::size_t>(v)].push_back(enumerate_neighborhood(joint, v, q));

    int prev_classes = 1;
    for (int round = 0; round < n; ++round) {
        std::vector<std::string> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::string sig = "(" + color[static_cast<std::size_t>(v)] + "|";
            std::vector<std::string> nb;
            for (int u : joint.neighbors(v)) nb.push_back(color[static_cast<std::size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            for (const auto& s : nb) sig += s + ",";
            for (int q = 1; q <= r; ++q) {
                sig += "|q" + std::to_string(q) + ":";
                std::vector<std::string> tuples;
                for (const auto& p : paths[static_cast<std::size_t>(v)][static_cast<std::size_t>(q - 1)]) {
                    std::string tup;
                    for (int node : p) tup += color[static_cast<std::size_t>(node)] + ".";
                    tuples.push_back(std::move(tup));
                }
                std::sort(tuples.begin(), tuples.end());
                for (const auto& s : tuples) sig += s + ";";
            }
            next[static_cast<std::size_t>(v)] = sig + ")";
        }
        // relabel to keep strings short
        std::map<std::string, int> ids;
        for (const auto& s : next) ids.emplace(s, static_cast<int>(ids.size()));
        for (int v = 0; v < n; ++v)
            color[static_cast<std::size_t>(v)] = "c" + std::to_string(ids[next[static_cast<std::size_t>(v)]]);
        if (static_cast<int>(ids.size()) == prev_classes) break;
        prev_classes = static_cast<int>(ids.size());
    }
    std::map<std::string, int> left;
    right.clear();
    for (int v = 0; v < n; ++v)
        ++(v < split ? left : right)[color[static_cast<std::size_t>(v)]];
    return left;
}

bool naive_loopy_distinguishes(const Graph& g, const Graph& h, int r) {
    std::map<std::string, int> right;
    const auto left = naive_loopy_histograms(disjoint_union(g, h), r, g.num_vertices(), right);
    return left != right;
}

}  // namespace

TEST_CASE("engine verdicts match a naive reference implementation") {
    Rng rng(4242);
    int agreements = 0;
    for (int t = 0; t < 40; ++t) {
        Graph g = gen_gnp(4 + rng.below(7), 0.45, rng.next());
        Graph h = (t % 3 == 0) ? permute(g, gen_permutation(g.num_vertices(), rng))
                               : gen_gnp(g.num_vertices(), 0.45, rng.next());
        for (int r = 0; r <= 3; ++r) {
            const bool engine = compare_graphs(g, h, MethodSpec::loopy(r)).distinguished;
            const bool naive = naive_loopy_distinguishes(g, h, r);
            CHECK(engine == naive);
            agreements += engine == naive;
        }
    }
    CHECK(agreements == 160);

    // the constructed equivalence pairs as well
    for (int r = 0; r <= 2; ++r) {
        auto [left, right] = gen_chordal_pair(r);
        CHECK_FALSE(naive_loopy_distinguishes(left, right, r));
        CHECK(naive_loopy_distinguishes(left, right, r + 1));
    }
    Graph base = gen_two_triangles_bridge();
    CHECK(naive_loopy_distinguishes(gen_cfi(base, false), gen_cfi(base, true), 1));
}

TEST_CASE("position-wise 2-WL verdicts coincide with 1-WL") {
    Rng rng(7001);
    for (int t = 0; t < 25; ++t) {
        Graph g = gen_gnp(3 + rng.below(8), 0.4, rng.next());
        Graph h = (t % 4 == 0) ? permute(g, gen_permutation(g.num_vertices(), rng))
                               : gen_gnp(g.num_vertices(), 0.4, rng.next());
        CHECK(compare_graphs(g, h, MethodSpec::wl1()).distinguished ==
              compare_graphs(g, h, MethodSpec::kwl(2)).distinguished);
    }
}

TEST_CASE("3-WL refines 2-WL and loopy refines 1-WL at the verdict level") {
    Rng rng(7002);
    for (int t = 0; t < 20; ++t) {
        Graph g = gen_gnp(3 + rng.below(7), 0.4, rng.next());
        Graph h = gen_gnp(g.num_vertices(), 0.4, rng.next());
        if (!compare_graphs(g, h, MethodSpec::kwl(3)).distinguished)
            CHECK_FALSE(compare_graphs(g, h, MethodSpec::kwl(2)).distinguished);
        for (int r = 1; r <= 3; ++r)
            if (!compare_graphs(g, h, MethodSpec::loopy(r)).distinguished)
                CHECK_FALSE(compare_graphs(g, h, MethodSpec::wl1()).distinguished);
    }
}

TEST_CASE("adjacency-augmented tuples only ever refine the plain verdicts") {
    RefineOptions atp;
    atp.atp = true;
    Rng rng(808);
    for (int t = 0; t < 20; ++t) {
        Graph g = gen_gnp(4 + rng.below(7), 0.45, rng.next());
        Graph h = (t % 3 == 0) ? permute(g, gen_permutation(g.num_vertices(), rng))
                               : gen_gnp(g.num_vertices(), 0.45, rng.next());
        for (int r = 1; r <= 3; ++r) {
            if (!compare_graphs(g, h, MethodSpec::loopy(r), atp).distinguished)
                CHECK_FALSE(compare_graphs(g, h, MethodSpec::loopy(r)).distinguished);
        }
    }
}

TEST_CASE("fingerprint equality agrees with joint-run comparisons") {
    std::vector<Graph> corpus;
    for (int r = 0; r <= 2; ++r) {
        auto [a, b] = gen_chordal_pair(r);
        corpus.push_back(a);
        corpus.push_back(b);
    }
    corpus.push_back(gen_cfi(gen_two_triangles_bridge(), false));
    corpus.push_back(gen_cfi(gen_two_triangles_bridge(), true));
    corpus.push_back(gen_shrikhande());
    corpus.push_back(gen_rook44());
    Rng rng(31337);
    for (int t = 0; t < 5; ++t) corpus.push_back(gen_gnp(6 + t, 0.4, rng.next()));

    for (auto m : {MethodSpec::wl1(), MethodSpec::loopy(1), MethodSpec::loopy(2), MethodSpec::kwl(2)}) {
        std::vector<std::string> fps;
        for (const auto& g : corpus) fps.push_back(invariant_fingerprint(g, m));
        for (std::size_t i = 0; i < corpus.size(); ++i)
            for (std::size_t j = i + 1; j < corpus.size(); ++j) {
                const bool joint = compare_graphs(corpus[i], corpus[j], m).distinguished;
                CHECK(joint == (fps[i] != fps[j]));
            }
    }
}

TEST_CASE("graph6 parser survives fuzzed input") {
    Rng rng(90210);
    int parsed = 0, rejected = 0;
    for (int t = 0; t < 3000; ++t) {
        std::string s;
        const int len = rng.below(24);
        for (int i = 0; i < len; ++i) s.push_back(static_cast<char>(32 + rng.below(96)));
        try {
            auto g = parse_graph6(s);
            ++parsed;
            CHECK(write_graph6(g) == s);  // parse accepts only canonical records
        } catch (const ParseError&) {
            ++rejected;
        }
    }
    CHECK(parsed + rejected == 3000);
    CHECK(rejected > 0);
}
