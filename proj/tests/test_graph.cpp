#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

#include "eccmat/graph.hpp"

using namespace eccmat;

namespace {

// Independent connectivity oracle: union-find over an explicit edge subset.
bool connected_by_dsu(int n, std::uint64_t mask) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (mask >> k & 1) parent[find(i)] = find(j);
    for (int v = 1; v < n; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

std::uint64_t count_connected_brute(int n) {
    std::uint64_t total = 0;
    for (std::uint64_t mask = 0; mask < edge_subset_count(n); ++mask)
        if (connected_by_dsu(n, mask)) ++total;
    return total;
}

}  // namespace

TEST_CASE("edge list parsing") {
    Graph k2 = parse_edge_list("2\n0 1");
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(0, 1));

    Graph p4 = parse_edge_list("4\n0 1\n1 2\n2 3");
    CHECK(p4 == generate(Family::path, {4}));

    Graph c5 = parse_edge_list("5\n0 1\n1 2\n2 3\n3 4\n4 0");
    CHECK(c5 == generate(Family::cycle, {5}));

    // Duplicates collapse, comments ignored.
    Graph dup = parse_edge_list("# a triangle\n3\n0 1\n0 1 # twice\n1 2\n0 2");
    CHECK(dup.edge_count() == 3);

    CHECK_THROWS_AS(parse_edge_list("2\n0 0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("2\n0 5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("2\n0 1 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
}

TEST_CASE("graph6 codec") {
    Graph k2 = parse_graph6("A_");
    CHECK(k2 == generate(Family::complete, {2}));
    CHECK(encode_graph6(k2) == "A_");

    // C5 encodes to 'D' (n=5) plus bits 1010011001 packed 6 at a time.
    Graph c5 = generate(Family::cycle, {5});
    CHECK(encode_graph6(c5) == "Dhc");
    Graph back = parse_graph6("Dhc");
    CHECK(back.edge_count() == 5);
    CHECK(back.degree_sequence() == std::vector<int>{2, 2, 2, 2, 2});

    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);   // long form
    CHECK_THROWS_AS(parse_graph6("D"), std::invalid_argument);     // truncated
    CHECK_THROWS_AS(parse_graph6("A_X"), std::invalid_argument);   // trailing
    CHECK_THROWS_AS(parse_graph6("A\x07"), std::invalid_argument); // bad char
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
}

TEST_CASE("graph6 round-trip property") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < edge_subset_count(n); ++mask) {
            Graph g = graph_from_subset_index(n, mask);
            std::string s = encode_graph6(g);
            CHECK(parse_graph6(s) == g);
        }
    }
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 8 + static_cast<int>(rng() % 40);
        Graph g(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (rng() & 1) g.add_edge(i, j);
        CHECK(parse_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("family generators") {
    Graph k4 = generate(Family::complete, {4});
    CHECK(k4.edge_count() == 6);
    CHECK(k4.degree_sequence() == std::vector<int>{3, 3, 3, 3});

    Graph pet = generate(Family::petersen, {});
    CHECK(pet.order() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(pet.regular_degree() == 3);

    Graph k23 = generate(Family::complete_bipartite, {2, 3});
    CHECK(k23.edge_count() == 6);
    CHECK(k23.degree_sequence() == std::vector<int>{3, 3, 2, 2, 2});

    CHECK_THROWS_AS(generate(Family::cycle, {2}), std::invalid_argument);
    CHECK_THROWS_AS(generate(Family::complete, {0}), std::invalid_argument);
    CHECK_THROWS_AS(generate(Family::complete_bipartite, {3}), std::invalid_argument);
}

TEST_CASE("join and complement") {
    Graph k2 = join(Graph(1), Graph(1));
    CHECK(k2 == generate(Family::complete, {2}));

    Graph wheel = join(generate(Family::cycle, {4}), Graph(1));
    CHECK(wheel.order() == 5);
    CHECK(wheel.degree(4) == 4);
    CHECK(wheel.edge_count() == 8);

    Graph c5k1 = join(generate(Family::cycle, {5}), Graph(1));
    CHECK(c5k1.order() == 6);
    CHECK(c5k1.edge_count() == 10);

    CHECK(complement(generate(Family::complete, {5})).edge_count() == 0);

    // complement is an involution; C5 is self-complementary.
    Graph c5 = generate(Family::cycle, {5});
    CHECK(complement(complement(c5)) == c5);
    Graph c5bar = complement(c5);
    CHECK(c5bar.edge_count() == 5);
    CHECK(c5bar.degree_sequence() == std::vector<int>{2, 2, 2, 2, 2});
    // Explicit isomorphism 0,2,4,1,3.
    std::vector<int> relabel = {0, 2, 4, 1, 3};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j) CHECK(c5bar.has_edge(relabel[i], relabel[j]) == c5.has_edge(i, j));
}

TEST_CASE("connected enumeration counts match the brute oracle") {
    std::vector<std::uint64_t> expected = {1, 1, 4, 38, 728};
    for (int n = 1; n <= 5; ++n) {
        CHECK(count_connected_brute(n) == expected[n - 1]);
        std::uint64_t seen = 0;
        enumerate_connected(n, [&](const Graph& g) {
            CHECK(g.is_connected());
            ++seen;
        });
        CHECK(seen == expected[n - 1]);
    }
    CHECK_THROWS_AS(enumerate_connected(8, [](const Graph&) {}), std::invalid_argument);
}

TEST_CASE("sampling is reproducible and yields connected graphs") {
    std::vector<std::string> first, second;
    sample_connected(6, 200, 42, [&](const Graph& g) {
        CHECK(g.is_connected());
        first.push_back(encode_graph6(g));
    });
    sample_connected(6, 200, 42, [&](const Graph& g) { second.push_back(encode_graph6(g)); });
    CHECK(first == second);
    CHECK(!first.empty());
}
