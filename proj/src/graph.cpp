#include "ihara/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace ihara {

Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
{
    Graph g;
    g.adj_.assign(n, {});
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= n || b >= n)
            throw Error(ErrorCode::OutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                                   ") outside [0," + std::to_string(n) + ")");
        if (a == b)
            throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(a));
        g.edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        throw Error(ErrorCode::DuplicateEdge,
                    "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") listed twice");
    for (const auto& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& list : g.adj_)
        std::sort(list.begin(), list.end());
    return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const
{
    const auto& list = adj_.at(a);
    return std::binary_search(list.begin(), list.end(), b);
}

bool Graph::connected() const
{
    if (adj_.empty())
        return false;
    std::vector<bool> seen(adj_.size(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj_[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == adj_.size();
}

IntMatrix Graph::adjacency() const
{
    IntMatrix a(vertex_count(), vertex_count());
    for (const auto& e : edges_) {
        a(e.u, e.v) = 1;
        a(e.v, e.u) = 1;
    }
    return a;
}

IntMatrix Graph::degree_matrix() const
{
    IntMatrix d(vertex_count(), vertex_count());
    for (Vertex v = 0; v < vertex_count(); ++v)
        d(v, v) = static_cast<unsigned long>(degree(v));
    return d;
}

IntMatrix Graph::q_matrix() const
{
    return degree_matrix() - IntMatrix::identity(vertex_count());
}

IntMatrix Graph::laplacian() const
{
    return degree_matrix() - adjacency();
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const
{
    if (perm.size() != vertex_count())
        throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
    std::vector<std::pair<Vertex, Vertex>> e;
    e.reserve(edges_.size());
    for (const auto& x : edges_)
        e.emplace_back(perm[x.u], perm[x.v]);
    return build_graph(vertex_count(), e);
}

SemiRegularBipartite SemiRegularBipartite::from_parts(Graph g, std::vector<Vertex> part1, std::vector<Vertex> part2)
{
    const std::size_t n = g.vertex_count();
    if (part1.empty() || part2.empty())
        throw Error(ErrorCode::NotSemiRegular, "both parts must be nonempty");
    std::vector<int> side(n, -1);
    for (Vertex v : part1) {
        if (v >= n || side[v] != -1)
            throw Error(ErrorCode::InvalidArgument, "part lists do not partition the vertex set");
        side[v] = 0;
    }
    for (Vertex v : part2) {
        if (v >= n || side[v] != -1)
            throw Error(ErrorCode::InvalidArgument, "part lists do not partition the vertex set");
        side[v] = 1;
    }
    if (part1.size() + part2.size() != n)
        throw Error(ErrorCode::InvalidArgument, "part lists do not cover the vertex set");
    for (const auto& e : g.edges())
        if (side[e.u] == side[e.v])
            throw Error(ErrorCode::NotBipartite,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") inside one part");

    auto uniform_degree = [&](const std::vector<Vertex>& part) {
        std::size_t d = g.degree(part.front());
        for (Vertex v : part)
            if (g.degree(v) != d)
                throw Error(ErrorCode::NotSemiRegular, "vertices " + std::to_string(part.front()) + " and " +
                                                           std::to_string(v) + " differ in degree");
        return d;
    };

    std::sort(part1.begin(), part1.end());
    std::sort(part2.begin(), part2.end());
    std::size_t q1 = uniform_degree(part1);
    std::size_t q2 = uniform_degree(part2);

    bool swap_parts = false;
    if (part1.size() != part2.size())
        swap_parts = part1.size() > part2.size();
    else if (q1 != q2)
        swap_parts = q1 < q2;
    else
        swap_parts = part2.front() < part1.front();
    if (swap_parts) {
        std::swap(part1, part2);
        std::swap(q1, q2);
    }

    SemiRegularBipartite s;
    s.graph_ = std::move(g);
    s.part1_ = std::move(part1);
    s.part2_ = std::move(part2);
    s.q1_ = q1;
    s.q2_ = q2;
    return s;
}

IntMatrix SemiRegularBipartite::biadjacency() const
{
    IntMatrix e(n1(), n2());
    for (std::size_t i = 0; i < n1(); ++i)
        for (std::size_t j = 0; j < n2(); ++j)
            if (graph_.has_edge(part1_[i], part2_[j]))
                e(i, j) = 1;
    return e;
}

SemiRegularBipartite detect_semiregular(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n < 2)
        throw Error(ErrorCode::InvalidArgument, "semi-regular detection needs at least two vertices");
    if (!g.connected())
        throw Error(ErrorCode::Disconnected, "graph is not connected");
    std::vector<int> colour(n, -1);
    std::deque<Vertex> queue{0};
    colour[0] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (colour[w] == -1) {
                colour[w] = 1 - colour[v];
                queue.push_back(w);
            } else if (colour[w] == colour[v]) {
                throw Error(ErrorCode::NotBipartite, "odd cycle through edge (" + std::to_string(v) + "," +
                                                         std::to_string(w) + ")");
            }
        }
    }
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    for (Vertex v = 0; v < n; ++v)
        (colour[v] == 0 ? a : b).push_back(v);
    return SemiRegularBipartite::from_parts(g, std::move(a), std::move(b));
}

Graph join(const Graph& g1, const Graph& g2)
{
    const std::size_t n1 = g1.vertex_count();
    const std::size_t n2 = g2.vertex_count();
    if (n1 == 0 || n2 == 0)
        throw Error(ErrorCode::InvalidArgument, "join needs two nonempty graphs");
    std::vector<std::pair<Vertex, Vertex>> e;
    e.reserve(g1.edge_count() + g2.edge_count() + n1 * n2);
    for (const auto& x : g1.edges())
        e.emplace_back(x.u, x.v);
    for (const auto& x : g2.edges())
        e.emplace_back(x.u + n1, x.v + n1);
    for (Vertex a = 0; a < n1; ++a)
        for (Vertex b = 0; b < n2; ++b)
            e.emplace_back(a, b + n1);
    return build_graph(n1 + n2, e);
}

SemiRegularBipartite gen_complete_bipartite(std::size_t m, std::size_t n)
{
    if (m == 0 || n == 0)
        throw Error(ErrorCode::InvalidArgument, "K_{m,n} needs m, n >= 1");
    const std::size_t small = std::min(m, n);
    const std::size_t large = std::max(m, n);
    std::vector<std::pair<Vertex, Vertex>> e;
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    for (Vertex i = 0; i < small; ++i)
        a.push_back(i);
    for (Vertex j = 0; j < large; ++j)
        b.push_back(small + j);
    for (Vertex i : a)
        for (Vertex j : b)
            e.emplace_back(i, j);
    return SemiRegularBipartite::from_parts(build_graph(m + n, e), a, b);
}

SemiRegularBipartite gen_even_cycle(std::size_t k)
{
    if (k < 2)
        throw Error(ErrorCode::InvalidArgument, "C_{2k} needs k >= 2");
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    for (Vertex v = 0; v < 2 * k; ++v)
        (v % 2 == 0 ? a : b).push_back(v);
    return SemiRegularBipartite::from_parts(gen_cycle(2 * k), a, b);
}

SemiRegularBipartite gen_crown(std::size_t k)
{
    if (k < 3)
        throw Error(ErrorCode::InvalidArgument, "crown graph needs k >= 3");
    std::vector<std::pair<Vertex, Vertex>> e;
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    for (Vertex i = 0; i < k; ++i) {
        a.push_back(i);
        b.push_back(k + i);
    }
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = 0; j < k; ++j)
            if (i != j)
                e.emplace_back(i, k + j);
    return SemiRegularBipartite::from_parts(build_graph(2 * k, e), a, b);
}

SemiRegularBipartite gen_subdivision(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n == 0 || !g.connected())
        throw Error(ErrorCode::NotRegular, "subdivision source must be connected");
    const std::size_t d = g.degree(0);
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != d)
            throw Error(ErrorCode::NotRegular, "vertex " + std::to_string(v) + " has degree " +
                                                   std::to_string(g.degree(v)) + ", expected " + std::to_string(d));
    if (d < 3)
        throw Error(ErrorCode::NotRegular, "subdivision source must have degree >= 3");
    std::vector<std::pair<Vertex, Vertex>> e;
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    for (Vertex v = 0; v < n; ++v)
        a.push_back(v);
    Vertex next = n;
    for (const auto& x : g.edges()) {
        e.emplace_back(x.u, next);
        e.emplace_back(x.v, next);
        b.push_back(next++);
    }
    return SemiRegularBipartite::from_parts(build_graph(next, e), a, b);
}

Graph gen_complete_graph(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            e.emplace_back(a, b);
    return build_graph(n, e);
}

Graph gen_cycle(std::size_t n)
{
    if (n < 3)
        throw Error(ErrorCode::InvalidArgument, "cycle needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v < n; ++v)
        e.emplace_back(v, (v + 1) % n);
    return build_graph(n, e);
}

Graph gen_petersen()
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);         // outer 5-cycle
        e.emplace_back(i, i + 5);               // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return build_graph(10, e);
}

} // namespace ihara
