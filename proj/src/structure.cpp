#include "eccmat/structure.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace eccmat {

std::vector<int> EccBipartition::signature(int n) const {
    std::vector<int> s(n, 0);
    for (int v : part_a) s[v] = 1;
    for (int v : part_b) s[v] = -1;
    return s;
}

Graph support_graph(const SymIntMatrix& e) {
    int n = e.order();
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (e.at(i, j) != 0) g.add_edge(i, j);
    return g;
}

bool is_irreducible(const SymIntMatrix& e) {
    return support_graph(e).is_connected();
}

std::optional<EccBipartition> ecc_bipartition(const SymIntMatrix& e) {
    int n = e.order();
    if (n < 2) throw std::invalid_argument("ecc_bipartition: order must be at least 2");
    Graph g = support_graph(e);
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;  // component roots (incl. isolated vertices) to part_a
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v) {
                if (!g.has_edge(u, v)) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;  // odd cycle in the support graph
                }
            }
        }
    }
    EccBipartition bp;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? bp.part_a : bp.part_b).push_back(v);
    if (bp.part_b.empty()) {
        // All-isolated support can leave part_b empty; both parts must be
        // nonempty, so move the last vertex over.
        bp.part_b.push_back(bp.part_a.back());
        bp.part_a.pop_back();
    }
    return bp;
}

bool is_spectrum_symmetric(const Spectrum& s, double tol) {
    size_t n = s.values.size();
    for (size_t i = 0; i < n; ++i)
        if (std::abs(s.values[i] + s.values[n - 1 - i]) > tol) return false;
    return true;
}

bool laplacians_similar(const Spectrum& spec_l, const Spectrum& spec_q, double tol) {
    return spectra_equal(spec_l, spec_q, tol);
}

}  // namespace eccmat
