#include <doctest.h>

#include "eccmat/metrics.hpp"

using namespace eccmat;

namespace {

// Reachability oracle: dist[i][j] = min{k : (A^k)[i][j] > 0}.
std::vector<std::vector<int>> dist_by_matrix_powers(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<long long>> pw(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) pw[i][i] = 1;
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) dist[i][i] = 0;
    for (int k = 1; k < n; ++k) {
        std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (pw[i][l])
                    for (int j = 0; j < n; ++j)
                        if (g.has_edge(l, j)) next[i][j] += pw[i][l];
        pw = next;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (dist[i][j] < 0 && pw[i][j] > 0) dist[i][j] = k;
    }
    return dist;
}

}  // namespace

TEST_CASE("distance profile on named graphs") {
    auto kn = distance_profile(generate(Family::complete, {6}));
    CHECK(kn.diameter == 1);
    CHECK(kn.radius == 1);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(kn.dist[i][j] == (i == j ? 0 : 1));

    auto p4 = distance_profile(generate(Family::path, {4}));
    CHECK(p4.ecc == std::vector<int>{3, 2, 2, 3});
    CHECK(p4.diameter == 3);
    CHECK(p4.radius == 2);

    auto pet = distance_profile(generate(Family::petersen, {}));
    CHECK(pet.diameter == 2);
    CHECK(pet.radius == 2);
    for (int e : pet.ecc) CHECK(e == 2);
}

TEST_CASE("disconnected input raises with the unreached pair") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK_THROWS_AS(distance_profile(g), DisconnectedGraph);
    try {
        distance_profile(g);
    } catch (const DisconnectedGraph& ex) {
        CHECK(ex.from() == 0);
        CHECK(ex.to() == 2);
    }
}

TEST_CASE("distances agree with the matrix-power oracle on all n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_connected(n, [&](const Graph& g) {
            auto dp = distance_profile(g);
            CHECK(dp.dist == dist_by_matrix_powers(g));
            for (int i = 0; i < n; ++i) {
                int m = 0;
                for (int j = 0; j < n; ++j) m = std::max(m, dp.dist[i][j]);
                CHECK(dp.ecc[i] == m);
            }
            CHECK(dp.radius <= dp.diameter);
            CHECK(dp.diameter <= 2 * dp.radius);
            // diameter 1 iff complete
            CHECK((dp.diameter <= 1) == (g.edge_count() == n * (n - 1) / 2));
        });
    }
}

TEST_CASE("vertex classes") {
    Graph kn = generate(Family::complete, {5});
    auto vc = vertex_classes(kn, distance_profile(kn));
    CHECK(vc.universal.size() == 5);

    Graph wheel = join(generate(Family::cycle, {4}), Graph(1));
    auto wvc = vertex_classes(wheel, distance_profile(wheel));
    CHECK(wvc.universal == std::vector<int>{4});

    Graph pet = generate(Family::petersen, {});
    auto pvc = vertex_classes(pet, distance_profile(pet));
    CHECK(pvc.universal.empty());
    CHECK(pvc.central.size() == 10);
    CHECK(pvc.periphery.size() == 10);
}

TEST_CASE("classical matrices") {
    Graph pet = generate(Family::petersen, {});
    auto cm = classical_matrices(pet);
    for (int i = 0; i < 10; ++i) CHECK(cm.laplacian.row_sum(i) == 0);
    // Q = L + 2A
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            CHECK(cm.signless_laplacian.at(i, j) ==
                  cm.laplacian.at(i, j) + 2 * cm.adjacency.at(i, j));
}
