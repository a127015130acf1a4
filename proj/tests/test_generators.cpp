#include "doctest.h"

#include <algorithm>

#include "lwl/cactus.hpp"
#include "lwl/generators.hpp"
#include "lwl/oracles.hpp"
#include "lwl/refine.hpp"

using namespace lwl;

TEST_CASE("elementary families") {
    CHECK(gen_cycle(3) == gen_complete(3));
    CHECK(gen_complete(4).num_edges() == 6);
    CHECK(gen_path(1) == gen_complete(1));
    CHECK(gen_path(5).num_edges() == 4);
    CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(gen_complete(0), std::invalid_argument);
}

TEST_CASE("chordal pair construction") {
    for (int r = 0; r <= 4; ++r) {
        auto [left, right] = gen_chordal_pair(r);
        CHECK(left.num_vertices() == 2 * r + 6);
        CHECK(right.num_vertices() == 2 * r + 6);
        CHECK(left.num_edges() == 2 * r + 7);
        CHECK(right.num_edges() == 2 * r + 7);
        CHECK(is_connected(left));
        CHECK(is_connected(right));

        auto degrees = [](const Graph& g) {
            std::vector<int> d;
            for (int v = 0; v < g.num_vertices(); ++v) d.push_back(g.degree(v));
            std::sort(d.begin(), d.end());
            return d;
        };
        CHECK(degrees(left) == degrees(right));
        // degree sequence is 2^(2r+4), 3^2
        auto d = degrees(left);
        CHECK(std::count(d.begin(), d.end(), 3) == 2);
        CHECK(std::count(d.begin(), d.end(), 2) == 2 * r + 4);

        CHECK_FALSE(compare_graphs(left, right, MethodSpec::wl1()).distinguished);
        if (r <= 2) CHECK_FALSE(is_iso_bruteforce(left, right));
    }
    auto [l0, r0] = gen_chordal_pair(0);
    Graph want = gen_cycle(6);
    want.add_edge(0, 3);
    CHECK(l0 == want);
    CHECK(is_iso_bruteforce(r0, gen_two_triangles_bridge()));
}

TEST_CASE("csl graphs") {
    Graph a = gen_csl(41, 2);
    CHECK(a.num_vertices() == 41);
    CHECK(a.num_edges() == 82);
    for (int v = 0; v < 41; ++v) CHECK(a.degree(v) == 4);
    // skip s and skip n-s yield the same edge set
    CHECK(gen_csl(41, 2) == gen_csl(41, 39));
    CHECK(gen_csl(41, 3) == gen_csl(41, 38));
    CHECK_FALSE(compare_graphs(gen_csl(41, 2), gen_csl(41, 3), MethodSpec::wl1()).distinguished);
    CHECK_THROWS_AS(gen_csl(41, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_csl(41, 40), std::invalid_argument);
    CHECK_THROWS_AS(gen_csl(4, 2), std::invalid_argument);
    // n even with s = n/2 collapses the duplicate skip edges
    Graph half = gen_csl(10, 5);
    CHECK(half.num_edges() == 15);
}

namespace {

int common_neighbors(const Graph& g, int u, int v) {
    int c = 0;
    for (int w : g.neighbors(u))
        if (w != v && g.has_edge(w, v)) ++c;
    return c;
}

void check_srg_16_6_2_2(const Graph& g) {
    REQUIRE(g.num_vertices() == 16);
    CHECK(g.num_edges() == 48);
    for (int v = 0; v < 16; ++v) CHECK(g.degree(v) == 6);
    for (int u = 0; u < 16; ++u)
        for (int v = u + 1; v < 16; ++v) CHECK(common_neighbors(g, u, v) == 2);
}

}  // namespace

TEST_CASE("shrikhande and rook are srg(16,6,2,2) but not isomorphic") {
    check_srg_16_6_2_2(gen_shrikhande());
    check_srg_16_6_2_2(gen_rook44());
    CHECK_FALSE(is_iso_bruteforce(gen_shrikhande(), gen_rook44()));
    CHECK_FALSE(compare_graphs(gen_shrikhande(), gen_rook44(), MethodSpec::wl1()).distinguished);
    // every vertex lies in lambda*deg/2 = 6 triangles
    for (const Graph& g : {gen_shrikhande(), gen_rook44()})
        for (int v = 0; v < 16; ++v) CHECK(rooted_sub_cycle(g, v, 3).value == 12);
}

TEST_CASE("two triangles plus bridge") {
    Graph f = gen_two_triangles_bridge();
    CHECK(f.num_edges() == 7);
    CHECK(f.num_vertices() == 6);
    CHECK(is_cactus(f));
    CHECK(is_r_cactus(f, 3));
    CHECK_FALSE(is_r_cactus(f, 2));
}

TEST_CASE("cfi pairs") {
    Graph f = gen_two_triangles_bridge();
    Graph g = gen_cfi(f, false);
    Graph h = gen_cfi(f, true);

    // |V| = sum over base vertices of 2^(deg-1)
    int want = 0;
    for (int v = 0; v < f.num_vertices(); ++v) want += 1 << (f.degree(v) - 1);
    CHECK(g.num_vertices() == want);
    CHECK(g.num_vertices() == 16);
    CHECK(h.num_vertices() == 16);
    CHECK(g.num_edges() == h.num_edges());

    CHECK_FALSE(is_iso_bruteforce(g, h));
    CHECK_FALSE(compare_graphs(g, h, MethodSpec::wl1()).distinguished);
    CHECK(compare_graphs(g, h, MethodSpec::loopy(1)).distinguished);

    // frozen counts, first computed with the hom oracle on this generator
    CHECK(hom_count(f, g).value == 128);
    CHECK(hom_count(f, h).value == 96);

    // another base: K_4 gives 4 * 2^2 = 16 vertices and a 1-WL-equivalent
    // non-isomorphic pair as well
    Graph gk = gen_cfi(gen_complete(4), false);
    Graph hk = gen_cfi(gen_complete(4), true);
    CHECK(gk.num_vertices() == 16);
    CHECK_FALSE(is_iso_bruteforce(gk, hk));
    CHECK_FALSE(compare_graphs(gk, hk, MethodSpec::wl1()).distinguished);

    Graph star(10);
    for (int i = 1; i < 10; ++i) star.add_edge(0, i);
    CHECK_THROWS_AS(gen_cfi(star, false), std::invalid_argument);
    CHECK_THROWS_AS(gen_cfi(disjoint_union(gen_cycle(3), gen_cycle(3)), false), std::invalid_argument);
}

TEST_CASE("random cactus generator") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 42ull, 99ull}) {
        Graph g = gen_random_cactus(30, 6, seed);
        CHECK(g.num_vertices() >= 30);
        CHECK(is_cactus(g));
        CHECK(is_r_cactus(g, 6));
        CHECK(is_connected(g));
        CHECK(write_graph6(g) == write_graph6(gen_random_cactus(30, 6, seed)));
    }
    for (std::uint64_t seed : {7ull, 8ull, 9ull}) {
        Graph g = gen_random_cactus(20, 3, seed);
        CHECK(is_r_cactus(g, 3));
    }
    CHECK(gen_random_cactus(1, 3, 5).num_vertices() == 1);
}

TEST_CASE("fan cactus generator") {
    // chord probability zero gives the plain cactus
    for (std::uint64_t seed : {1ull, 5ull, 12ull}) {
        auto [fan, root] = gen_fan_cactus(25, 6, 0.0, seed);
        CHECK(root == 0);
        CHECK(fan == gen_random_cactus(25, 6, seed));
    }
    // seed 11 grows a single 5-cycle at the root; full chord probability
    // fans it out with the 2 possible chords
    auto [wheel, root] = gen_fan_cactus(5, 5, 1.0, 11);
    CHECK(wheel.num_vertices() == 5);
    CHECK(wheel.num_edges() == 7);
    CHECK_FALSE(is_cactus(wheel));
    auto td = canonical_tree_decomposition(wheel, root);
    CHECK(bool(validate_tree_decomposition(wheel, td)));
    CHECK(td.width() <= 2);

    // fan cacti always admit the canonical width-2 decomposition
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto [fan, r] = gen_fan_cactus(30, 7, 0.5, seed);
        auto fan_td = canonical_tree_decomposition(fan, r);
        CHECK(bool(validate_tree_decomposition(fan, fan_td)));
        CHECK(fan_td.width() <= 2);
    }
}

TEST_CASE("gnp determinism") {
    Graph a = gen_gnp(20, 0.3, 123);
    Graph b = gen_gnp(20, 0.3, 123);
    CHECK(a == b);
    CHECK(gen_gnp(20, 0.0, 1).num_edges() == 0);
    CHECK(gen_gnp(6, 1.0, 1) == gen_complete(6));
}
