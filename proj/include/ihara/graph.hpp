#ifndef IHARA_GRAPH_HPP
#define IHARA_GRAPH_HPP

#include "ihara/matrix.hpp"

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace ihara {

using Vertex = std::size_t;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Sorted ascending.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    bool has_edge(Vertex a, Vertex b) const;
    bool connected() const;

    IntMatrix adjacency() const;
    IntMatrix degree_matrix() const;
    /// D - I
    IntMatrix q_matrix() const;
    /// D - A
    IntMatrix laplacian() const;

    /// Relabels vertex v as perm[v].
    Graph relabeled(const std::vector<Vertex>& perm) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.adj_.size() == b.adj_.size(); }

private:
    friend Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Validates and builds a simple graph. Endpoints must lie in [0, n)
/// (OutOfRange), loops are rejected (LoopEdge) and so is any pair listed
/// twice in either orientation (DuplicateEdge).
Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

/// A connected (q1,q2)-semi-regular bipartite graph with its bipartition.
///
/// Normalized so that n1 <= n2; when n1 == n2 the part holding the smallest
/// vertex index comes first. Part vertex lists are sorted.
class SemiRegularBipartite {
public:
    /// Checks every invariant (partition, bipartite edges, uniform degree
    /// per part) and normalizes the part order.
    static SemiRegularBipartite from_parts(Graph g, std::vector<Vertex> part1, std::vector<Vertex> part2);

    const Graph& graph() const noexcept { return graph_; }
    const std::vector<Vertex>& part1() const noexcept { return part1_; }
    const std::vector<Vertex>& part2() const noexcept { return part2_; }
    std::size_t n1() const noexcept { return part1_.size(); }
    std::size_t n2() const noexcept { return part2_.size(); }
    std::size_t q1() const noexcept { return q1_; }
    std::size_t q2() const noexcept { return q2_; }
    std::size_t nu() const noexcept { return n1() + n2(); }
    std::size_t epsilon() const noexcept { return n1() * q1_; }

    /// n1 x n2 block E with E(i,j) = 1 iff part1[i] ~ part2[j].
    IntMatrix biadjacency() const;

private:
    SemiRegularBipartite() = default;

    Graph graph_;
    std::vector<Vertex> part1_;
    std::vector<Vertex> part2_;
    std::size_t q1_ = 0;
    std::size_t q2_ = 0;
};

/// BFS 2-colouring of a connected graph with n >= 2, then degree checks.
/// Errors: Disconnected, NotBipartite, NotSemiRegular.
SemiRegularBipartite detect_semiregular(const Graph& g);

/// Disjoint union plus every edge between the two vertex sets; g2's vertices
/// are shifted by |V(g1)|.
Graph join(const Graph& g1, const Graph& g2);

SemiRegularBipartite gen_complete_bipartite(std::size_t m, std::size_t n);
/// The cycle C_{2k}, k >= 2.
SemiRegularBipartite gen_even_cycle(std::size_t k);
/// K_{k,k} minus a perfect matching, k >= 3.
SemiRegularBipartite gen_crown(std::size_t k);
/// One new vertex on every edge of a connected d-regular graph, d >= 3.
SemiRegularBipartite gen_subdivision(const Graph& g);

Graph gen_complete_graph(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_petersen();

} // namespace ihara

#endif // IHARA_GRAPH_HPP
