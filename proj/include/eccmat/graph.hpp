#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eccmat {

// Simple undirected graph on vertices 0..n-1, dense adjacency.
class Graph {
public:
    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> degrees() const;
    // Sorted descending.
    std::vector<int> degree_sequence() const;

    // All degrees equal; returns the common degree if so.
    std::optional<int> regular_degree() const;

    bool is_connected() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<std::vector<bool>> adj_;
};

enum class Family {
    complete,
    complete_minus_edge,
    complete_bipartite,
    cycle,
    path,
    star,
    petersen,
};

std::optional<Family> family_from_name(std::string_view name);
std::string family_name(Family f);

// Edge-list text: first line n, then "u v" per line, '#' starts a comment.
Graph parse_edge_list(const std::string& text);

// graph6 short form, n <= 62.
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

Graph generate(Family f, const std::vector<int>& params);

// Disjoint union plus all cross edges; g keeps labels 0..n_g-1.
Graph join(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

// Number of labeled simple graphs on n vertices: 2^(n(n-1)/2).
std::uint64_t edge_subset_count(int n);

// Builds the graph whose edge set is the given subset index, edges ordered
// (0,1),(0,2),(1,2),(0,3),... (column-major upper triangle, the graph6 order).
Graph graph_from_subset_index(int n, std::uint64_t mask);

// Every connected labeled graph on n vertices, exactly once. n <= 7.
void enumerate_connected(int n, const std::function<void(const Graph&)>& fn);

// Visits connected graphs with subset index in [begin, end); the sweep
// driver partitions the index space across workers with this.
void enumerate_connected_range(int n, std::uint64_t begin, std::uint64_t end,
                               const std::function<void(const Graph&)>& fn);

// Draws `count` uniform labeled graphs and forwards the connected ones.
void sample_connected(int n, std::uint64_t count, std::uint64_t seed,
                      const std::function<void(const Graph&)>& fn);

}  // namespace eccmat
