#include <doctest.h>

#include "eccmat/ecc.hpp"
#include "eccmat/linalg.hpp"

using namespace eccmat;

namespace {

SymIntMatrix ecc_of(const Graph& g) { return eccentricity_matrix(g, distance_profile(g)); }

}  // namespace

TEST_CASE("eccentricity matrix of named graphs") {
    // E(K_n) = A(K_n)
    Graph k5 = generate(Family::complete, {5});
    CHECK(ecc_of(k5) == classical_matrices(k5).adjacency);

    // E(K_n - e) = D(K_n - e): every distance entry survives
    Graph k5e = generate(Family::complete_minus_edge, {5});
    auto dp = distance_profile(k5e);
    auto e = ecc_of(k5e);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(e.at(i, j) == dp.dist[i][j]);

    // E(P4), hand-evaluated
    auto ep4 = ecc_of(generate(Family::path, {4}));
    long long rows[4][4] = {{0, 0, 2, 3}, {0, 0, 0, 2}, {2, 0, 0, 0}, {3, 2, 0, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(ep4.at(i, j) == rows[i][j]);
}

TEST_CASE("transmission statistics") {
    auto pet = ecc_stats(ecc_of(generate(Family::petersen, {})));
    for (long long t : pet.tr) CHECK(t == 12);
    CHECK(pet.regular_degree == 12);
    CHECK(pet.wiener == 60);
    CHECK(pet.sq_sum == 120);
    CHECK(pet.tr_avg() == doctest::Approx(12.0));

    auto wheel = ecc_stats(ecc_of(join(generate(Family::cycle, {4}), Graph(1))));
    CHECK(wheel.tr == std::vector<long long>{3, 3, 3, 3, 4});
    CHECK_FALSE(wheel.regular_degree.has_value());

    // K1 degenerate case
    auto k1 = ecc_stats(ecc_of(Graph(1)));
    CHECK(k1.tr == std::vector<long long>{0});
    CHECK(k1.regular_degree == 0);
}

TEST_CASE("eccentricity Laplacians") {
    Graph pet = generate(Family::petersen, {});
    auto e = ecc_of(pet);
    auto stats = ecc_stats(e);
    auto el = ecc_laplacian(e, stats);
    auto eq = ecc_signless_laplacian(e, stats);

    for (int i = 0; i < 10; ++i) CHECK(el.row_sum(i) == 0);
    // E^L + E^Q = 2 Diag(tr), E^Q - E^L = 2E
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            CHECK(el.at(i, j) + eq.at(i, j) == (i == j ? 2 * stats.tr[i] : 0));
            CHECK(eq.at(i, j) - el.at(i, j) == 2 * e.at(i, j));
        }
}

TEST_CASE("structural invariants over the n <= 5 sweep") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_connected(n, [&](const Graph& g) {
            auto dp = distance_profile(g);
            auto e = eccentricity_matrix(g, dp);
            auto stats = ecc_stats(e);
            for (int i = 0; i < n; ++i) {
                CHECK(e.at(i, i) == 0);
                bool has_nonzero = false;
                for (int j = 0; j < n; ++j) {
                    if (e.at(i, j) != 0) {
                        has_nonzero = true;
                        CHECK(e.at(i, j) == dp.dist[i][j]);
                        CHECK(e.at(i, j) >= dp.radius);
                    }
                }
                // every vertex realizes its eccentricity (except K1)
                if (n > 1) CHECK(has_nonzero);
            }
            // positive semidefiniteness of both Laplacians
            auto el = ecc_laplacian(e, stats);
            auto eq = ecc_signless_laplacian(e, stats);
            CHECK(sym_eigenvalues(el).values.back() >= -1e-8);
            CHECK(sym_eigenvalues(eq).values.back() >= -1e-8);
        });
    }
}
