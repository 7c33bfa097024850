#include "eccmat/metrics.hpp"

#include <algorithm>
#include <queue>

namespace eccmat {

DistanceProfile distance_profile(const Graph& g) {
    int n = g.order();
    DistanceProfile dp;
    dp.dist.assign(n, std::vector<int>(n, -1));
    dp.ecc.assign(n, 0);
    for (int s = 0; s < n; ++s) {
        auto& row = dp.dist[s];
        row[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v) {
                if (g.has_edge(u, v) && row[v] < 0) {
                    row[v] = row[u] + 1;
                    q.push(v);
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (row[v] < 0) throw DisconnectedGraph(s, v);
            dp.ecc[s] = std::max(dp.ecc[s], row[v]);
        }
    }
    dp.diameter = *std::max_element(dp.ecc.begin(), dp.ecc.end());
    dp.radius = *std::min_element(dp.ecc.begin(), dp.ecc.end());
    return dp;
}

VertexClasses vertex_classes(const Graph& g, const DistanceProfile& dp) {
    int n = g.order();
    VertexClasses vc;
    vc.degrees = g.degrees();
    for (int v = 0; v < n; ++v) {
        if (vc.degrees[v] == n - 1) vc.universal.push_back(v);
        if (dp.ecc[v] == dp.radius) vc.central.push_back(v);
        if (dp.ecc[v] == dp.diameter) vc.periphery.push_back(v);
    }
    return vc;
}

ClassicalMatrices classical_matrices(const Graph& g) {
    int n = g.order();
    ClassicalMatrices m{SymIntMatrix(n), SymIntMatrix(n), SymIntMatrix(n)};
    for (int u = 0; u < n; ++u) {
        long long deg = g.degree(u);
        m.laplacian.set(u, u, deg);
        m.signless_laplacian.set(u, u, deg);
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) {
                m.adjacency.set(u, v, 1);
                m.laplacian.set(u, v, -1);
                m.signless_laplacian.set(u, v, 1);
            }
        }
    }
    return m;
}

}  // namespace eccmat
