#include "eccmat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace eccmat {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
}

double frobenius(const std::vector<double>& a) {
    double s = 0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

// Groups consecutive sorted eigenvalues whose gap to the group representative
// stays within tol.
std::vector<std::pair<double, int>> group_values(const std::vector<double>& values, double tol) {
    std::vector<std::pair<double, int>> groups;
    for (double v : values) {
        if (!groups.empty() && std::abs(v - groups.back().first) <= tol) {
            ++groups.back().second;
        } else {
            groups.emplace_back(v, 1);
        }
    }
    return groups;
}

}  // namespace

EigenSystem sym_eigensystem_dense(std::vector<double> a, int n, bool want_vectors, double tol) {
    std::vector<double> v;
    if (want_vectors) {
        v.assign(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;
    }
    const double fro = frobenius(a);
    const int max_sweeps = 100;
    if (fro > 0) {
        int sweep = 0;
        while (off_diagonal_norm(a, n) > tol * fro) {
            if (++sweep > max_sweeps)
                throw std::runtime_error("Jacobi eigensolver failed to converge");
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    double apq = a[p * n + q];
                    if (std::abs(apq) <= 1e-300) continue;
                    double theta = (a[q * n + q] - a[p * n + p]) / (2 * apq);
                    double t = (theta >= 0 ? 1.0 : -1.0) /
                               (std::abs(theta) + std::sqrt(theta * theta + 1));
                    double c = 1.0 / std::sqrt(t * t + 1);
                    double s = t * c;
                    for (int k = 0; k < n; ++k) {
                        double akp = a[k * n + p], akq = a[k * n + q];
                        a[k * n + p] = c * akp - s * akq;
                        a[k * n + q] = s * akp + c * akq;
                    }
                    for (int k = 0; k < n; ++k) {
                        double apk = a[p * n + k], aqk = a[q * n + k];
                        a[p * n + k] = c * apk - s * aqk;
                        a[q * n + k] = s * apk + c * aqk;
                    }
                    if (want_vectors) {
                        for (int k = 0; k < n; ++k) {
                            double vkp = v[k * n + p], vkq = v[k * n + q];
                            v[k * n + p] = c * vkp - s * vkq;
                            v[k * n + q] = s * vkp + c * vkq;
                        }
                    }
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a[i * n + i] > a[j * n + j]; });

    EigenSystem es;
    es.spectrum.values.resize(n);
    for (int k = 0; k < n; ++k) es.spectrum.values[k] = a[order[k] * n + order[k]];
    es.spectrum.groups = group_values(es.spectrum.values, 1e-6 * std::max(1.0, fro));
    if (want_vectors) {
        es.vectors.assign(n, std::vector<double>(n));
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) es.vectors[k][i] = v[i * n + order[k]];
    }
    return es;
}

Spectrum sym_eigenvalues(const SymIntMatrix& m, double tol) {
    return sym_eigensystem_dense(m.to_dense_double(), m.order(), false, tol).spectrum;
}

EigenSystem sym_eigensystem(const SymIntMatrix& m, double tol) {
    return sym_eigensystem_dense(m.to_dense_double(), m.order(), true, tol);
}

std::string IntPolynomial::to_string() const {
    std::string out;
    int d = degree();
    for (int i = 0; i <= d; ++i) {
        const mpz_class& c = coeffs[i];
        if (c == 0 && d > 0) continue;
        if (!out.empty()) out += (c >= 0 ? " + " : " - ");
        else if (c < 0) out += "-";
        mpz_class a = abs(c);
        int p = d - i;
        if (a != 1 || p == 0) out += a.get_str();
        if (p > 0) out += "t" + (p > 1 ? "^" + std::to_string(p) : "");
    }
    return out.empty() ? "0" : out;
}

double IntPolynomial::eval(double t) const {
    double acc = 0;
    for (const auto& c : coeffs) acc = acc * t + c.get_d();
    return acc;
}

IntPolynomial char_poly_exact(const SymIntMatrix& m) {
    int n = m.order();
    std::vector<mpz_class> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i * n + j] = static_cast<long>(m.at(i, j));

    IntPolynomial p;
    p.coeffs.assign(n + 1, 0);
    p.coeffs[0] = 1;

    // M_0 = I; M_k = A*M_{k-1} + c_{k-1} I with c_k = -tr(A*M_k)/k.
    std::vector<mpz_class> work(static_cast<size_t>(n) * n), am(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) work[i * n + i] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                mpz_class s = 0;
                for (int l = 0; l < n; ++l) s += a[i * n + l] * work[l * n + j];
                am[i * n + j] = s;
            }
        }
        mpz_class tr = 0;
        for (int i = 0; i < n; ++i) tr += am[i * n + i];
        mpz_class c;
        mpz_divexact_ui(c.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        c = -c;
        p.coeffs[k] = c;
        work.swap(am);
        for (int i = 0; i < n; ++i) work[i * n + i] += c;
    }
    return p;
}

double spectra_distance(const Spectrum& a, const Spectrum& b) {
    return multiset_distance(a.values, b.values);
}

double multiset_distance(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("spectrum comparison: length mismatch");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double worst = 0;
    for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
    return spectra_distance(a, b) <= tol;
}

std::vector<double> auxiliary_eigenvalues(const Spectrum& spec_l, double tr_avg) {
    std::vector<double> eta(spec_l.values.size());
    for (size_t i = 0; i < eta.size(); ++i) eta[i] = spec_l.values[i] - tr_avg;
    return eta;
}

double energy(const std::vector<double>& values) {
    double s = 0;
    for (double v : values) s += std::abs(v);
    return s;
}

IntPolynomial poly_one() { return IntPolynomial{{mpz_class(1)}}; }

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

IntPolynomial poly_linear_power(const mpz_class& root, int k) {
    IntPolynomial r = poly_one();
    IntPolynomial lin{{mpz_class(1), -root}};
    for (int i = 0; i < k; ++i) r = poly_mul(r, lin);
    return r;
}

IntPolynomial poly_quadratic(const mpz_class& b, const mpz_class& c) {
    return IntPolynomial{{mpz_class(1), b, c}};
}

}  // namespace eccmat
