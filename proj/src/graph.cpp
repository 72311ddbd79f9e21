#include "vnum/graph.hpp"

#include "vnum/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace vnum {

Graph::Graph(int num_vertices, std::vector<std::pair<int, int>> edges) : n_(num_vertices) {
    if (n_ < 1) throw validation_error("graph needs at least one vertex");
    if (n_ > 64) throw capacity_error("graphs above 64 vertices are not representable");
    adj_.assign(static_cast<std::size_t>(n_), 0);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw validation_error("edge endpoint out of range");
        if (u == v) throw validation_error("loop edge at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        seen.emplace(u, v);
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u - 1)] |= bit(v);
        adj_[static_cast<std::size_t>(v - 1)] |= bit(u);
    }
}

bool Graph::adjacent(int u, int v) const {
    return (adj_mask(u) & bit(v)) != 0;
}

int Graph::degree(int v) const {
    return std::popcount(adj_mask(v));
}

std::uint64_t Graph::full_mask() const {
    return n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
}

bool Graph::has_isolated_vertex() const {
    for (int v = 1; v <= n_; ++v)
        if (adj_mask(v) == 0) return true;
    return false;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::uint64_t reached = bit(1);
    std::uint64_t frontier = reached;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f) + 1;
            f &= f - 1;
            next |= adj_mask(v);
        }
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == full_mask();
}

Matching Matching::of(const Graph& g, std::vector<std::pair<int, int>> edges) {
    Matching m;
    std::uint64_t used = 0;
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (!g.adjacent(u, v))
            throw validation_error("matching edge {" + std::to_string(u) + "," +
                                   std::to_string(v) + "} is not an edge of the graph");
        std::uint64_t em = Graph::bit(u) | Graph::bit(v);
        if (used & em) throw validation_error("matching edges are not pairwise disjoint");
        used |= em;
        m.edges.emplace_back(u, v);
    }
    m.perfect = used == g.full_mask();
    m.induced = true;
    for (auto [u, v] : g.edges()) {
        if ((Graph::bit(u) & used) && (Graph::bit(v) & used)) {
            bool chosen = std::find(m.edges.begin(), m.edges.end(), std::make_pair(u, v)) !=
                          m.edges.end();
            if (!chosen) {
                m.induced = false;
                break;
            }
        }
    }
    return m;
}

std::uint64_t Matching::vertex_mask() const {
    std::uint64_t m = 0;
    for (auto [u, v] : edges) m |= Graph::bit(u) | Graph::bit(v);
    return m;
}

std::string Matching::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ",";
        out += "{t" + std::to_string(edges[i].first) + ",t" + std::to_string(edges[i].second) + "}";
    }
    return out + "}";
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return out;
}

std::uint64_t vertices_to_mask(const Graph& g, const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) {
        if (v < 1 || v > g.num_vertices())
            throw validation_error("vertex index out of range: " + std::to_string(v));
        m |= Graph::bit(v);
    }
    return m;
}

std::string vertex_set_to_string(const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += "t" + std::to_string(vs[i]);
    }
    return out + "}";
}

std::string mask_to_string(std::uint64_t mask) {
    return vertex_set_to_string(mask_to_vertices(mask));
}

} // namespace vnum
