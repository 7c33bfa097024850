#pragma once

#include <optional>
#include <vector>

#include "eccmat/graph.hpp"
#include "eccmat/matrix.hpp"
#include "eccmat/metrics.hpp"

namespace eccmat {

struct EccStats {
    std::vector<long long> tr;  // row sums of the eccentricity matrix
    long long tr_min = 0;
    long long tr_max = 0;
    long long tr_sum = 0;
    long long wiener = 0;   // tr_sum / 2
    long long sq_sum = 0;   // sum over unordered pairs of squared entries
    std::optional<long long> regular_degree;

    double tr_avg() const { return tr.empty() ? 0.0 : static_cast<double>(tr_sum) / tr.size(); }
};

// E_ij = d(i,j) if d(i,j) = min{e(i), e(j)}, else 0.
SymIntMatrix eccentricity_matrix(const Graph& g, const DistanceProfile& dp);

EccStats ecc_stats(const SymIntMatrix& e);

// Diag(tr) - E
SymIntMatrix ecc_laplacian(const SymIntMatrix& e, const EccStats& stats);

// Diag(tr) + E
SymIntMatrix ecc_signless_laplacian(const SymIntMatrix& e, const EccStats& stats);

}  // namespace eccmat
