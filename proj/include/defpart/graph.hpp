#ifndef DEFPART_GRAPH_HPP
#define DEFPART_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace defpart {

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;

    /// Sorts and dedupes.
    static VertexSet of(std::vector<int> ids);
    /// {0, 1, ..., n-1}
    static VertexSet range(int n);

    bool contains(int v) const;
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    int min_id() const { return ids_.front(); }

    VertexSet minus(int v) const;
    VertexSet plus(int v) const;

    const std::vector<int>& ids() const { return ids_; }
    std::vector<int>::const_iterator begin() const { return ids_.begin(); }
    std::vector<int>::const_iterator end() const { return ids_.end(); }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

private:
    std::vector<int> ids_;
};

/// Immutable simple undirected graph with sorted adjacency lists.
/// Vertex ids are 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Duplicate edges collapse silently; loops and out-of-range
    /// endpoints raise ParseError.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    long long m() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
    long long m_ = 0;
};

/// Connected components of G[s], ordered by minimum vertex id,
/// each component sorted ascending.
std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& s);

/// |N(v) ∩ s|. v need not lie in s.
int degree_in(const Graph& g, const VertexSet& s, int v);

/// { v ∈ s : degree_in(g, s, v) == r }
VertexSet degree_r_vertices(const Graph& g, const VertexSet& s, int r);

/// Empty sets and singletons count as connected.
bool is_connected_induced(const Graph& g, const VertexSet& s);

/// Vertices v of a connected G[s] with G[s - v] still connected
/// (complement of the articulation points). Throws NotConnected.
VertexSet non_cut_vertices(const Graph& g, const VertexSet& s);

struct DegeneracyOrder {
    /// Each vertex has at most `degeneracy` neighbors earlier in the
    /// order, so greedy coloring along it needs at most degeneracy+1
    /// colors.
    std::vector<int> order;
    int degeneracy = 0;
};
DegeneracyOrder degeneracy_order(const Graph& g, const VertexSet& s);

bool is_complete(const Graph& g, const VertexSet& s);
bool is_regular(const Graph& g, const VertexSet& s, int r);
int max_degree(const Graph& g);

/// Backtracking clique search. SizeGuardExceeded for size > 12.
bool has_clique(const Graph& g, int size);

}  // namespace defpart

#endif
