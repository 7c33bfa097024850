#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "eccmat/graph.hpp"
#include "eccmat/matrix.hpp"

namespace eccmat {

// Raised whenever a computation needs a connected graph and BFS fails to
// reach some vertex. Carries the unreached pair.
class DisconnectedGraph : public std::runtime_error {
public:
    DisconnectedGraph(int from, int to)
        : std::runtime_error("graph is disconnected: no path from vertex " +
                             std::to_string(from) + " to vertex " + std::to_string(to)),
          from_(from),
          to_(to) {}
    int from() const { return from_; }
    int to() const { return to_; }

private:
    int from_, to_;
};

struct DistanceProfile {
    std::vector<std::vector<int>> dist;  // exact hop counts
    std::vector<int> ecc;
    int diameter = 0;
    int radius = 0;
};

struct VertexClasses {
    std::vector<int> universal;
    std::vector<int> central;
    std::vector<int> periphery;
    std::vector<int> degrees;
};

struct ClassicalMatrices {
    SymIntMatrix adjacency;
    SymIntMatrix laplacian;
    SymIntMatrix signless_laplacian;
};

// BFS from every vertex; throws DisconnectedGraph.
DistanceProfile distance_profile(const Graph& g);

VertexClasses vertex_classes(const Graph& g, const DistanceProfile& dp);

ClassicalMatrices classical_matrices(const Graph& g);

}  // namespace eccmat
