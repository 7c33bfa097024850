#include <doctest.h>

#include <cmath>
#include <random>

#include "eccmat/ecc.hpp"
#include "eccmat/linalg.hpp"

using namespace eccmat;

namespace {

SymIntMatrix ecc_of(const Graph& g) { return eccentricity_matrix(g, distance_profile(g)); }

SymIntMatrix ecc_laplacian_of(const Graph& g) {
    auto e = ecc_of(g);
    return ecc_laplacian(e, ecc_stats(e));
}

std::vector<mpz_class> coeffs(std::initializer_list<long> cs) {
    return std::vector<mpz_class>(cs.begin(), cs.end());
}

}  // namespace

TEST_CASE("eigensolver on closed-form matrices") {
    auto s = sym_eigenvalues(ecc_of(generate(Family::complete, {4})));
    std::vector<double> expected = {3, -1, -1, -1};
    CHECK(multiset_distance(s.values, expected) < 1e-10);
    CHECK(s.groups.size() == 2);
    CHECK(s.groups[0].second == 1);
    CHECK(s.groups[1].second == 3);

    SymIntMatrix zero(3);
    auto z = sym_eigenvalues(zero);
    CHECK(z.values == std::vector<double>{0, 0, 0});

    auto l = sym_eigenvalues(ecc_laplacian_of(generate(Family::petersen, {})));
    std::vector<double> lexp = {16, 16, 16, 16, 16, 10, 10, 10, 10, 0};
    CHECK(multiset_distance(l.values, lexp) < 1e-8);
}

TEST_CASE("eigenvector residuals") {
    auto m = ecc_laplacian_of(generate(Family::petersen, {}));
    auto es = sym_eigensystem(m);
    double fro = m.frobenius_norm();
    for (int k = 0; k < m.order(); ++k) {
        double res = 0;
        for (int i = 0; i < m.order(); ++i) {
            double mv = 0;
            for (int j = 0; j < m.order(); ++j)
                mv += static_cast<double>(m.at(i, j)) * es.vectors[k][j];
            double d = mv - es.spectrum.values[k] * es.vectors[k][i];
            res += d * d;
        }
        CHECK(std::sqrt(res) <= 10 * 1e-12 * fro + 1e-12);
    }
}

TEST_CASE("exact characteristic polynomials") {
    // E(K3): t^3 - 3t - 2
    CHECK(char_poly_exact(ecc_of(generate(Family::complete, {3}))).coeffs ==
          coeffs({1, 0, -3, -2}));

    // E^L(K4 - e): t^4 - 14t^3 + 64t^2 - 96t
    CHECK(char_poly_exact(ecc_laplacian_of(generate(Family::complete_minus_edge, {4}))).coeffs ==
          coeffs({1, -14, 64, -96, 0}));

    // 1x1 zero matrix: t
    CHECK(char_poly_exact(SymIntMatrix(1)).coeffs == coeffs({1, 0}));

    // diagonal matrix: product of (t - d_i)
    SymIntMatrix d(3);
    d.set(0, 0, 2);
    d.set(1, 1, -5);
    d.set(2, 2, 7);
    auto expected = poly_mul(poly_linear_power(2, 1),
                             poly_mul(poly_linear_power(-5, 1), poly_linear_power(7, 1)));
    CHECK(char_poly_exact(d) == expected);
}

TEST_CASE("exact and numeric routes agree on random integer matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        SymIntMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.set(i, j, static_cast<long long>(rng() % 11) - 5);
        auto p = char_poly_exact(m);
        auto s = sym_eigenvalues(m);
        double fro = m.frobenius_norm();
        double scale = std::pow(1 + fro, n);
        for (double lambda : s.values) CHECK(std::abs(p.eval(lambda)) <= 1e-6 * scale);

        double tr = 0, tr2 = 0;
        for (double v : s.values) {
            tr += v;
            tr2 += v * v;
        }
        long long mtr = m.trace();
        long long mtr2 = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mtr2 += m.at(i, j) * m.at(j, i);
        double tol = 1e-8 * n * std::max(1.0, fro);
        CHECK(std::abs(tr - static_cast<double>(mtr)) <= tol);
        CHECK(std::abs(tr2 - static_cast<double>(mtr2)) <= tol);
    }
}

TEST_CASE("spectrum comparison") {
    Spectrum a{{2, -2}, {}};
    Spectrum b{{-2, 2}, {}};
    CHECK(spectra_equal(a, a, 0));
    CHECK(spectra_equal(a, b, 1e-12));  // order-insensitive
    Spectrum c{{2, -2, 0}, {}};
    CHECK_THROWS_AS(spectra_equal(a, c, 1e-12), std::invalid_argument);
}

TEST_CASE("auxiliary eigenvalues and energy") {
    Graph pet = generate(Family::petersen, {});
    auto e = ecc_of(pet);
    auto stats = ecc_stats(e);
    auto spec_l = sym_eigenvalues(ecc_laplacian(e, stats));
    auto eta = auxiliary_eigenvalues(spec_l, stats.tr_avg());
    std::vector<double> expected = {4, 4, 4, 4, 4, -2, -2, -2, -2, -12};
    CHECK(multiset_distance(eta, expected) < 1e-8);

    double sum = 0;
    for (double x : eta) sum += x;
    CHECK(std::abs(sum) < 1e-8);

    CHECK(energy(sym_eigenvalues(e).values) == doctest::Approx(40.0).epsilon(1e-9));
    CHECK(energy(eta) == doctest::Approx(40.0).epsilon(1e-9));
    CHECK(energy({}) == 0.0);
}

TEST_CASE("polynomial printing") {
    auto p = char_poly_exact(ecc_of(generate(Family::complete, {3})));
    CHECK(p.to_string() == "t^3 - 3t - 2");
}
