#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vnum {

// Simple undirected graph on vertices 1..n. Adjacency is kept as bitmasks
// (bit v-1 for vertex v), which caps graphs at 64 vertices; the exponential
// searches are capped much lower via config::max_graph_vertices().
class Graph {
public:
    Graph(int num_vertices, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    std::uint64_t adj_mask(int v) const { return adj_[static_cast<std::size_t>(v - 1)]; }
    std::uint64_t closed_mask(int v) const { return adj_mask(v) | bit(v); }
    std::uint64_t full_mask() const;
    static std::uint64_t bit(int v) { return 1ULL << (v - 1); }

    bool has_isolated_vertex() const;
    bool is_connected() const; // vacuously true for n <= 1

private:
    int n_;
    std::vector<std::pair<int, int>> edges_; // u < v, sorted, deduplicated
    std::vector<std::uint64_t> adj_;
};

// A matching of a host graph, in caller-supplied edge order. The flags are
// computed against the host at construction.
struct Matching {
    std::vector<std::pair<int, int>> edges;
    bool induced = false;
    bool perfect = false;

    static Matching of(const Graph& g, std::vector<std::pair<int, int>> edges);
    std::uint64_t vertex_mask() const;
    std::string to_string() const; // "{{t1,t2},{t3,t4}}"
};

std::vector<int> mask_to_vertices(std::uint64_t mask);
std::uint64_t vertices_to_mask(const Graph& g, const std::vector<int>& vs);
std::string vertex_set_to_string(const std::vector<int>& vs); // "{t1,t4}"
std::string mask_to_string(std::uint64_t mask);

} // namespace vnum
