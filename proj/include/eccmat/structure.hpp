#pragma once

#include <optional>
#include <vector>

#include "eccmat/graph.hpp"
#include "eccmat/linalg.hpp"
#include "eccmat/matrix.hpp"

namespace eccmat {

struct EccBipartition {
    std::vector<int> part_a;
    std::vector<int> part_b;

    // +1 on part_a, -1 on part_b; the similarity witness.
    std::vector<int> signature(int n) const;
};

// Graph on the same vertices with an edge wherever the entry is nonzero.
Graph support_graph(const SymIntMatrix& e);

// For symmetric nonnegative matrices, irreducible iff the support graph is
// connected.
bool is_irreducible(const SymIntMatrix& e);

// Present iff the support graph is 2-colorable; isolated support vertices go
// to part_a. Requires n >= 2.
std::optional<EccBipartition> ecc_bipartition(const SymIntMatrix& e);

bool is_spectrum_symmetric(const Spectrum& s, double tol);

// Real symmetric matrices are similar iff their spectra coincide.
bool laplacians_similar(const Spectrum& spec_l, const Spectrum& spec_q, double tol);

}  // namespace eccmat
