#include "defpart/generate.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "defpart/errors.hpp"

namespace defpart {

Graph path_graph(int n) {
    if (n < 0) throw GenerationFailed("path: n < 0");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw GenerationFailed("cycle: n < 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    if (n < 0) throw GenerationFailed("complete: n < 0");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return Graph::from_edges(10, edges);
}

Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw GenerationFailed("gnp: bad parameters");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_regular(int n, int r, std::uint64_t seed) {
    if (n < 0 || r < 0 || (n > 0 && r >= n) || (static_cast<long long>(n) * r) % 2 != 0)
        throw GenerationFailed("random_regular: infeasible parameters");
    if (r == 0) return Graph::from_edges(n, {});
    Rng rng(seed);
    // Simplicity probability decays like exp(-(r^2-1)/4); the cap keeps
    // r <= 5 practical and fails loudly beyond that.
    const int attempts = 3000;
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(n) * r);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        stubs.clear();
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < r; ++i) stubs.push_back(v);
        for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
            std::swap(stubs[i], stubs[rng.next_below(i + 1)]);
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        return Graph::from_edges(n, {seen.begin(), seen.end()});
    }
    throw GenerationFailed("random_regular: attempt cap reached");
}

Graph triangle_free_gnp(int n, double p, std::uint64_t seed) {
    Graph g = gnp(n, p, seed);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!adj[u][v]) continue;
            for (int w = v + 1; w < n; ++w)
                if (adj[u][w] && adj[v][w]) adj[v][w] = adj[w][v] = 0;
        }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[u][v]) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

int spec_int(const std::string& tok, const std::string& spec) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw BadParameter("bad generator spec: " + spec);
    }
}

double spec_double(const std::string& tok, const std::string& spec) {
    try {
        size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw BadParameter("bad generator spec: " + spec);
    }
}

}  // namespace

Graph generate_from_spec(const std::string& spec, std::uint64_t seed) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::vector<std::string> args;
    if (colon != std::string::npos) args = split(spec.substr(colon + 1), ',');

    auto want = [&](size_t count) {
        if (args.size() != count) throw BadParameter("bad generator spec: " + spec);
    };
    if (kind == "petersen") {
        want(0);
        return petersen_graph();
    }
    if (kind == "cycle") {
        want(1);
        return cycle_graph(spec_int(args[0], spec));
    }
    if (kind == "path") {
        want(1);
        return path_graph(spec_int(args[0], spec));
    }
    if (kind == "complete") {
        want(1);
        return complete_graph(spec_int(args[0], spec));
    }
    if (kind == "gnp") {
        want(2);
        return gnp(spec_int(args[0], spec), spec_double(args[1], spec), seed);
    }
    if (kind == "regular") {
        want(2);
        return random_regular(spec_int(args[0], spec), spec_int(args[1], spec), seed);
    }
    if (kind == "trifree") {
        want(2);
        return triangle_free_gnp(spec_int(args[0], spec), spec_double(args[1], spec), seed);
    }
    throw BadParameter("unknown generator kind: " + spec);
}

}  // namespace defpart
