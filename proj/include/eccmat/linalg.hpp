#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "eccmat/matrix.hpp"

namespace eccmat {

struct Spectrum {
    std::vector<double> values;                   // descending
    std::vector<std::pair<double, int>> groups;   // (representative, multiplicity)
};

struct EigenSystem {
    Spectrum spectrum;
    // vectors[k] is a unit eigenvector for spectrum.values[k].
    std::vector<std::vector<double>> vectors;
};

// Exact integer characteristic polynomial det(tI - M), degree-descending,
// monic.
struct IntPolynomial {
    std::vector<mpz_class> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const IntPolynomial&) const = default;
    std::string to_string() const;
    double eval(double t) const;
};

// Cyclic Jacobi. Converges when the off-diagonal Frobenius norm drops below
// tol * ||M||_F; 100-sweep cap.
Spectrum sym_eigenvalues(const SymIntMatrix& m, double tol = 1e-12);
EigenSystem sym_eigensystem(const SymIntMatrix& m, double tol = 1e-12);

// Same solver for plain dense symmetric doubles (row-major, n*n).
EigenSystem sym_eigensystem_dense(std::vector<double> a, int n, bool want_vectors,
                                  double tol = 1e-12);

// Faddeev-LeVerrier over arbitrary-precision integers; divisions are exact.
IntPolynomial char_poly_exact(const SymIntMatrix& m);

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol);

// Worst entrywise deviation between the two sorted eigenvalue vectors.
double spectra_distance(const Spectrum& a, const Spectrum& b);
double multiset_distance(std::vector<double> a, std::vector<double> b);

// eta_i = xi_i^L - average transmission.
std::vector<double> auxiliary_eigenvalues(const Spectrum& spec_l, double tr_avg);

// Sum of absolute values.
double energy(const std::vector<double>& values);

// Polynomial builders for closed-form checks.
IntPolynomial poly_one();
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
// (t - root)^k
IntPolynomial poly_linear_power(const mpz_class& root, int k);
// t^2 + b t + c
IntPolynomial poly_quadratic(const mpz_class& b, const mpz_class& c);

}  // namespace eccmat
