#include "eccmat/ecc.hpp"

#include <algorithm>
#include <stdexcept>

namespace eccmat {

SymIntMatrix eccentricity_matrix(const Graph& g, const DistanceProfile& dp) {
    int n = g.order();
    SymIntMatrix e(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int d = dp.dist[i][j];
            if (d == std::min(dp.ecc[i], dp.ecc[j])) e.set(i, j, d);
        }
    }
    return e;
}

EccStats ecc_stats(const SymIntMatrix& e) {
    int n = e.order();
    if (n == 0) throw std::invalid_argument("ecc_stats: empty matrix");
    EccStats s;
    s.tr.resize(n);
    for (int i = 0; i < n; ++i) {
        s.tr[i] = e.row_sum(i);
        s.tr_sum += s.tr[i];
        for (int j = i + 1; j < n; ++j) s.sq_sum += e.at(i, j) * e.at(i, j);
    }
    s.tr_min = *std::min_element(s.tr.begin(), s.tr.end());
    s.tr_max = *std::max_element(s.tr.begin(), s.tr.end());
    s.wiener = s.tr_sum / 2;
    if (s.tr_min == s.tr_max) s.regular_degree = s.tr_min;
    return s;
}

SymIntMatrix ecc_laplacian(const SymIntMatrix& e, const EccStats& stats) {
    int n = e.order();
    SymIntMatrix l(n);
    for (int i = 0; i < n; ++i) {
        l.set(i, i, stats.tr[i]);
        for (int j = i + 1; j < n; ++j) l.set(i, j, -e.at(i, j));
    }
    return l;
}

SymIntMatrix ecc_signless_laplacian(const SymIntMatrix& e, const EccStats& stats) {
    int n = e.order();
    SymIntMatrix q(n);
    for (int i = 0; i < n; ++i) {
        q.set(i, i, stats.tr[i]);
        for (int j = i + 1; j < n; ++j) q.set(i, j, e.at(i, j));
    }
    return q;
}

}  // namespace eccmat
