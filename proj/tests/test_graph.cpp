#include "doctest.h"

#include <algorithm>
#include <set>

#include "lwl/generators.hpp"
#include "lwl/graph.hpp"

using namespace lwl;

TEST_CASE("graph basics and invariants") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    g.add_edge(1, 0);  // duplicate, collapses
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 7), std::out_of_range);

    // adjacency stays symmetric and m matches the handshake sum
    int deg_sum = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        deg_sum += g.degree(v);
        for (int u : g.neighbors(v)) CHECK(g.has_edge(u, v));
    }
    CHECK(deg_sum == 2 * g.num_edges());
}

TEST_CASE("graph6 hand-encoded records") {
    // derived by hand from the bit layout: n+63, then the column-major
    // upper triangle packed 6 bits per byte
    CHECK(write_graph6(gen_complete(1)) == "@");
    CHECK(write_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(write_graph6(gen_complete(3)) == "Bw");

    CHECK(parse_graph6("@") == gen_complete(1));
    CHECK(parse_graph6("A_") == Graph::from_edges(2, {{0, 1}}));
    CHECK(parse_graph6("Bw") == gen_complete(3));
    CHECK(parse_graph6(">>graph6<<Bw") == gen_complete(3));
    CHECK(parse_graph6("?").num_vertices() == 0);
}

TEST_CASE("graph6 malformed records are rejected with positions") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);        // truncated
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);      // trailing data
    CHECK_THROWS_AS(parse_graph6("B "), ParseError);       // char below 63
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);       // nonzero padding ('`' = 10000.)
    CHECK_THROWS_AS(parse_graph6("~A"), ParseError);       // truncated long form
    CHECK_THROWS_AS(parse_graph6("~~????"), ParseError);   // 8-byte form unsupported
    try {
        parse_graph6("Bw\x7f");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("byte 2") != std::string::npos);
    }
}

TEST_CASE("graph6 roundtrip is the identity on random graphs") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + rng.below(40);
        Graph g = gen_gnp(n, 0.3, rng.next());
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
    // large graphs exercise the 4-byte size form
    Graph big = gen_gnp(1000, 0.004, 99);
    const std::string rec = write_graph6(big);
    CHECK(rec[0] == '~');
    CHECK(parse_graph6(rec) == big);
}

TEST_CASE("edge list format") {
    const char* text = "4 3\n# a comment\n0 1\n1 2\n2 3\n";
    Graph g = parse_edge_list(text);
    CHECK(g == gen_path(4));
    CHECK(parse_edge_list(write_edge_list(g)) == g);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);   // missing edge
    CHECK_THROWS_AS(parse_edge_list("not a graph"), ParseError);
}

TEST_CASE("dataset parsing") {
    auto graphs = parse_graph6_file(">>graph6<<Bw\n@ A_\n");
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0] == gen_complete(3));
    CHECK(graphs[1].num_vertices() == 1);
    CHECK_THROWS_AS(parse_graph6_file("Bw\nB\n"), ParseError);
}

TEST_CASE("disjoint union") {
    Graph a = gen_complete(1), b = gen_complete(1);
    Graph u = disjoint_union(a, b);
    CHECK(u.num_vertices() == 2);
    CHECK(u.num_edges() == 0);

    Graph k2 = Graph::from_edges(2, {{0, 1}});
    Graph matching = disjoint_union(k2, k2);
    CHECK(matching.num_edges() == 2);
    CHECK(matching.has_edge(2, 3));

    Graph mix = disjoint_union(gen_cycle(3), gen_cycle(4));
    CHECK(mix.num_vertices() == 7);
    CHECK(mix.num_edges() == 7);
    CHECK(num_components(mix) == 2);

    // edge counts and component counts add
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        Graph g = gen_gnp(1 + rng.below(12), 0.3, rng.next());
        Graph h = gen_gnp(1 + rng.below(12), 0.3, rng.next());
        Graph gu = disjoint_union(g, h);
        CHECK(gu.num_edges() == g.num_edges() + h.num_edges());
        CHECK(num_components(gu) == num_components(g) + num_components(h));
    }
}

TEST_CASE("induced subgraph") {
    CHECK(induced_subgraph(gen_complete(4), {0, 1, 2}) == gen_complete(3));
    CHECK(induced_subgraph(gen_cycle(5), {0, 1, 2}) == gen_path(3));
    CHECK(induced_subgraph(gen_cycle(5), {}).num_vertices() == 0);
    CHECK_THROWS_AS(induced_subgraph(gen_cycle(5), {0, 9}), std::out_of_range);
}

TEST_CASE("permute") {
    Graph k3 = gen_complete(3);
    CHECK(permute(k3, VertexPermutation::identity(3)) == k3);
    VertexPermutation p{{2, 0, 1}};
    CHECK(permute(k3, p) == k3);
    CHECK_THROWS_AS(permute(k3, VertexPermutation::identity(4)), std::invalid_argument);

    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        Graph g = gen_gnp(2 + rng.below(15), 0.4, rng.next());
        auto sigma = gen_permutation(g.num_vertices(), rng);
        CHECK(permute(permute(g, sigma), sigma.inverse()) == g);
    }
}

TEST_CASE("biconnected components") {
    auto blocks = biconnected_components(gen_cycle(5));
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].size() == 5);

    blocks = biconnected_components(gen_path(4));
    CHECK(blocks.size() == 3);
    for (const auto& b : blocks) CHECK(b.size() == 1);

    blocks = biconnected_components(gen_two_triangles_bridge());
    std::multiset<std::size_t> sizes;
    for (const auto& b : blocks) sizes.insert(b.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 3, 3});

    // blocks partition the edge set
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
        Graph g = gen_gnp(2 + rng.below(20), 0.25, rng.next());
        std::set<std::pair<int, int>> seen;
        std::size_t total = 0;
        for (const auto& b : biconnected_components(g))
            for (auto e : b) {
                CHECK(seen.insert(e).second);
                ++total;
            }
        CHECK(total == static_cast<std::size_t>(g.num_edges()));
    }
}
