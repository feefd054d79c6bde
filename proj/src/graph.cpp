#include "defpart/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "defpart/errors.hpp"

namespace defpart {

VertexSet VertexSet::of(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    VertexSet s;
    s.ids_ = std::move(ids);
    return s;
}

VertexSet VertexSet::range(int n) {
    VertexSet s;
    s.ids_.resize(n);
    std::iota(s.ids_.begin(), s.ids_.end(), 0);
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet VertexSet::minus(int v) const {
    VertexSet s;
    s.ids_.reserve(ids_.size());
    for (int u : ids_)
        if (u != v) s.ids_.push_back(u);
    return s;
}

VertexSet VertexSet::plus(int v) const {
    VertexSet s;
    s.ids_.reserve(ids_.size() + 1);
    bool placed = false;
    for (int u : ids_) {
        if (!placed && v < u) {
            s.ids_.push_back(v);
            placed = true;
        }
        if (u == v) placed = true;
        s.ids_.push_back(u);
    }
    if (!placed) s.ids_.push_back(v);
    return s;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw ParseError("negative vertex count");
    Graph g;
    g.adj_.resize(n);
    std::vector<std::pair<int, int>> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge endpoint out of range: " + std::to_string(u) + " " +
                             std::to_string(v));
        if (u == v) throw ParseError("loop edge at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        es.emplace_back(u, v);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    for (auto [u, v] : es) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.m_ = static_cast<long long>(es.size());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> comps;
    if (s.empty()) return comps;
    std::vector<char> in(g.n(), 0), seen(g.n(), 0);
    for (int v : s) in[v] = 1;
    std::vector<int> queue;
    for (int v : s) {
        if (seen[v]) continue;
        queue.clear();
        queue.push_back(v);
        seen[v] = 1;
        for (size_t h = 0; h < queue.size(); ++h) {
            for (int w : g.neighbors(queue[h])) {
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        comps.push_back(VertexSet::of(queue));
    }
    return comps;
}

int degree_in(const Graph& g, const VertexSet& s, int v) {
    if (s.empty()) return 0;
    int cnt = 0;
    if (g.degree(v) <= s.size()) {
        for (int w : g.neighbors(v)) cnt += s.contains(w);
    } else {
        for (int w : s)
            if (w != v && g.adjacent(v, w)) ++cnt;
    }
    return cnt;
}

VertexSet degree_r_vertices(const Graph& g, const VertexSet& s, int r) {
    std::vector<int> out;
    for (int v : s)
        if (degree_in(g, s, v) == r) out.push_back(v);
    return VertexSet::of(std::move(out));
}

bool is_connected_induced(const Graph& g, const VertexSet& s) {
    if (s.size() <= 1) return true;
    std::vector<char> in(g.n(), 0);
    for (int v : s) in[v] = 1;
    std::vector<int> queue{s.min_id()};
    in[s.min_id()] = 0;
    for (size_t h = 0; h < queue.size(); ++h)
        for (int w : g.neighbors(queue[h]))
            if (in[w]) {
                in[w] = 0;
                queue.push_back(w);
            }
    return static_cast<int>(queue.size()) == s.size();
}

VertexSet non_cut_vertices(const Graph& g, const VertexSet& s) {
    if (!is_connected_induced(g, s))
        throw NotConnected("non_cut_vertices: induced subgraph is not connected");
    if (s.size() <= 1) return s;

    const int ns = s.size();
    std::vector<int> local(g.n(), -1);
    for (int i = 0; i < ns; ++i) local[s.ids()[i]] = i;
    std::vector<std::vector<int>> adj(ns);
    for (int i = 0; i < ns; ++i)
        for (int w : g.neighbors(s.ids()[i]))
            if (local[w] >= 0) adj[i].push_back(local[w]);

    std::vector<int> disc(ns, -1), low(ns, 0), parent(ns, -1), it(ns, 0);
    std::vector<char> artic(ns, 0);
    int timer = 0;
    int root_children = 0;
    std::vector<int> stack{0};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        int v = stack.back();
        if (it[v] < static_cast<int>(adj[v].size())) {
            int w = adj[v][it[v]++];
            if (disc[w] == -1) {
                parent[w] = v;
                if (v == 0) ++root_children;
                disc[w] = low[w] = timer++;
                stack.push_back(w);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                int u = stack.back();
                low[u] = std::min(low[u], low[v]);
                if (u != 0 && low[v] >= disc[u]) artic[u] = 1;
            }
        }
    }
    if (root_children >= 2) artic[0] = 1;

    std::vector<int> out;
    for (int i = 0; i < ns; ++i)
        if (!artic[i]) out.push_back(s.ids()[i]);
    return VertexSet::of(std::move(out));
}

DegeneracyOrder degeneracy_order(const Graph& g, const VertexSet& s) {
    DegeneracyOrder res;
    const int ns = s.size();
    if (ns == 0) return res;

    std::vector<char> in(g.n(), 0);
    for (int v : s) in[v] = 1;
    std::vector<int> deg(g.n(), 0);
    int maxd = 0;
    for (int v : s) {
        int d = 0;
        for (int w : g.neighbors(v)) d += in[w];
        deg[v] = d;
        maxd = std::max(maxd, d);
    }
    // Bucket queue keyed by current degree; std::set gives smallest id
    // among minimum-degree vertices.
    std::vector<std::set<int>> bucket(maxd + 1);
    for (int v : s) bucket[deg[v]].insert(v);

    std::vector<int> removal;
    removal.reserve(ns);
    int degeneracy = 0;
    int d = 0;
    for (int step = 0; step < ns; ++step) {
        d = std::max(0, d - 1);
        while (bucket[d].empty()) ++d;
        int v = *bucket[d].begin();
        bucket[d].erase(bucket[d].begin());
        degeneracy = std::max(degeneracy, d);
        in[v] = 0;
        removal.push_back(v);
        for (int w : g.neighbors(v)) {
            if (in[w]) {
                bucket[deg[w]].erase(w);
                --deg[w];
                bucket[deg[w]].insert(w);
            }
        }
    }
    res.order.assign(removal.rbegin(), removal.rend());
    res.degeneracy = degeneracy;
    return res;
}

bool is_complete(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (degree_in(g, s, v) != s.size() - 1) return false;
    return true;
}

bool is_regular(const Graph& g, const VertexSet& s, int r) {
    for (int v : s)
        if (degree_in(g, s, v) != r) return false;
    return true;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

namespace {

bool extend_clique(const Graph& g, const std::vector<int>& cand, int need) {
    if (need == 0) return true;
    if (static_cast<int>(cand.size()) < need) return false;
    for (size_t i = 0; i + need <= cand.size(); ++i) {
        std::vector<int> next;
        for (size_t j = i + 1; j < cand.size(); ++j)
            if (g.adjacent(cand[i], cand[j])) next.push_back(cand[j]);
        if (extend_clique(g, next, need - 1)) return true;
    }
    return false;
}

}  // namespace

bool has_clique(const Graph& g, int size) {
    if (size > 12) throw SizeGuardExceeded("has_clique: size > 12");
    if (size <= 0) return true;
    if (size == 1) return g.n() >= 1;
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    return extend_clique(g, all, size);
}

}  // namespace defpart
