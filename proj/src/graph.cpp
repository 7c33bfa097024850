#include "eccmat/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace eccmat {

Graph::Graph(int n) : n_(n), adj_(n, std::vector<bool>(n, false)) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
}

int Graph::edge_count() const {
    int m = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj_[u][v]) ++m;
    return m;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u][v];
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge rejected");
    adj_[u][v] = true;
    adj_[v][u] = true;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (adj_[v][u]) ++d;
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

std::vector<int> Graph::degree_sequence() const {
    auto d = degrees();
    std::sort(d.rbegin(), d.rend());
    return d;
}

std::optional<int> Graph::regular_degree() const {
    int r = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != r) return std::nullopt;
    return r;
}

bool Graph::is_connected() const {
    std::vector<bool> seen(n_, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n_; ++v) {
            if (adj_[u][v] && !seen[v]) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n_;
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "complete") return Family::complete;
    if (name == "complete_minus_edge") return Family::complete_minus_edge;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    if (name == "cycle") return Family::cycle;
    if (name == "path") return Family::path;
    if (name == "star") return Family::star;
    if (name == "petersen") return Family::petersen;
    return std::nullopt;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::complete_minus_edge: return "complete_minus_edge";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::cycle: return "cycle";
        case Family::path: return "path";
        case Family::star: return "star";
        case Family::petersen: return "petersen";
    }
    throw std::logic_error("unknown family");
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<Graph> g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!g) {
            long long n;
            if (!(ls >> n)) continue;  // skip leading blank/comment lines
            std::string extra;
            if (ls >> extra)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": expected vertex count only");
            if (n < 1 || n > 100000)
                throw std::invalid_argument("edge list: vertex count out of range");
            g.emplace(static_cast<int>(n));
            continue;
        }
        long long u, v;
        if (!(ls >> u)) continue;
        std::string extra;
        if (!(ls >> v) || (ls >> extra))
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected 'u v'");
        if (u < 0 || u >= g->order() || v < 0 || v >= g->order())
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": vertex out of range");
        if (u == v)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": loop edge");
        g->add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!g) throw std::invalid_argument("edge list: missing vertex count");
    return *g;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = trim(text);
    if (!s.empty() && s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    if (s[0] == '~') throw std::invalid_argument("graph6: long form (n > 62) not supported");
    int c = static_cast<unsigned char>(s[0]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid character");
    int n = c - 63;
    if (n < 1) throw std::invalid_argument("graph6: order must be at least 1");
    int bits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((bits + 5) / 6);
    if (s.size() - 1 < need) throw std::invalid_argument("graph6: truncated bit vector");
    if (s.size() - 1 > need) throw std::invalid_argument("graph6: trailing characters");
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int ch = static_cast<unsigned char>(s[1 + k / 6]);
            if (ch < 63 || ch > 126) throw std::invalid_argument("graph6: invalid character");
            if ((ch - 63) >> (5 - k % 6) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6: order exceeds short-form limit 62");
    int bits = n * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
    out[0] = static_cast<char>(63 + n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (g.has_edge(i, j)) out[1 + k / 6] += static_cast<char>(1 << (5 - k % 6));
        }
    }
    return out;
}

Graph generate(Family f, const std::vector<int>& params) {
    auto need = [&](size_t count) {
        if (params.size() != count)
            throw std::invalid_argument("family " + family_name(f) + ": expected " +
                                        std::to_string(count) + " parameter(s)");
    };
    switch (f) {
        case Family::complete: {
            need(1);
            int n = params[0];
            if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
            return g;
        }
        case Family::complete_minus_edge: {
            need(1);
            int n = params[0];
            if (n < 3) throw std::invalid_argument("complete_minus_edge: n >= 3 required");
            Graph g = generate(Family::complete, {n});
            Graph h(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!(u == 0 && v == 1)) h.add_edge(u, v);
            return h;
        }
        case Family::complete_bipartite: {
            need(2);
            int m = params[0], n = params[1];
            if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: m, n >= 1 required");
            Graph g(m + n);
            for (int u = 0; u < m; ++u)
                for (int v = m; v < m + n; ++v) g.add_edge(u, v);
            return g;
        }
        case Family::cycle: {
            need(1);
            int n = params[0];
            if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
            Graph g(n);
            for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
            return g;
        }
        case Family::path: {
            need(1);
            int n = params[0];
            if (n < 1) throw std::invalid_argument("path: n >= 1 required");
            Graph g(n);
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case Family::star: {
            need(1);
            int n = params[0];
            if (n < 1) throw std::invalid_argument("star: n >= 1 required");
            Graph g(n);
            for (int i = 1; i < n; ++i) g.add_edge(0, i);
            return g;
        }
        case Family::petersen: {
            need(0);
            Graph g(10);
            for (int i = 0; i < 5; ++i) {
                g.add_edge(i, (i + 1) % 5);              // outer 5-cycle
                g.add_edge(5 + i, 5 + (i + 2) % 5);      // inner pentagram
                g.add_edge(i, 5 + i);                    // spokes
            }
            return g;
        }
    }
    throw std::logic_error("unknown family");
}

Graph join(const Graph& g, const Graph& h) {
    int ng = g.order(), nh = h.order();
    Graph out(ng + nh);
    for (int u = 0; u < ng; ++u)
        for (int v = u + 1; v < ng; ++v)
            if (g.has_edge(u, v)) out.add_edge(u, v);
    for (int u = 0; u < nh; ++u)
        for (int v = u + 1; v < nh; ++v)
            if (h.has_edge(u, v)) out.add_edge(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
    return out;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

std::uint64_t edge_subset_count(int n) {
    if (n < 1 || n > 11) throw std::invalid_argument("edge_subset_count: n out of range");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_subset_index(int n, std::uint64_t mask) {
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (mask >> k & 1) g.add_edge(i, j);
    return g;
}

void enumerate_connected(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumerate_connected: exhaustive mode requires 1 <= n <= 7");
    enumerate_connected_range(n, 0, edge_subset_count(n), fn);
}

void enumerate_connected_range(int n, std::uint64_t begin, std::uint64_t end,
                               const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumerate_connected_range: requires 1 <= n <= 7");
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        Graph g = graph_from_subset_index(n, mask);
        if (g.is_connected()) fn(g);
    }
}

void sample_connected(int n, std::uint64_t count, std::uint64_t seed,
                      const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 62) throw std::invalid_argument("sample_connected: n out of range");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    for (std::uint64_t t = 0; t < count; ++t) {
        Graph g(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (coin(rng)) g.add_edge(i, j);
        if (g.is_connected()) fn(g);
    }
}

}  // namespace eccmat
