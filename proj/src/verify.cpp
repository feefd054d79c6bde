#include "defpart/verify.hpp"

#include <algorithm>
#include <string>

namespace defpart {

// The checkers below intentionally re-derive degrees, components and
// membership from the raw adjacency lists instead of reusing the
// engine's caches or graph_core traversals.

namespace {

std::vector<std::vector<int>> components_of_part(const Graph& g, const std::vector<int>& part,
                                                 int i) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (part[v] != i || seen[v]) continue;
        std::vector<int> comp{v};
        seen[v] = 1;
        for (size_t h = 0; h < comp.size(); ++h)
            for (int w : g.neighbors(comp[h]))
                if (part[w] == i && !seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool forbidden_component(const PermissibleFamily& fam, const Graph& g,
                         const std::vector<int>& comp) {
    switch (fam.kind) {
        case PermissibleFamily::Kind::empty:
            return false;
        case PermissibleFamily::Kind::non_complete_regular: {
            for (int v : comp) {
                int d = 0;
                for (int w : g.neighbors(v))
                    if (std::binary_search(comp.begin(), comp.end(), w)) ++d;
                if (d != fam.r) return false;
            }
            return static_cast<int>(comp.size()) != fam.r + 1;  // connected by construction
        }
        case PermissibleFamily::Kind::custom:
            return fam.predicate(g, VertexSet::of(comp));
    }
    return false;
}

}  // namespace

ValidityReport verify_partition(const Instance& inst, const Partition& p) {
    const Graph& g = inst.graph();
    const auto& r = inst.targets();
    const std::vector<int>& part = p.assignment();
    ValidityReport report;

    for (int v = 0; v < g.n(); ++v) {
        int d = 0;
        for (int w : g.neighbors(v))
            if (part[w] == part[v]) ++d;
        if (d > r[part[v]])
            report.violations.push_back(
                {part[v], Violation::Kind::degree_cap, VertexSet::of({v})});
    }
    if (inst.mode() == Mode::main) {
        for (int i = 0; i < inst.k(); ++i)
            for (auto& comp : components_of_part(g, part, i))
                if (forbidden_component(inst.families()[i], g, comp))
                    report.violations.push_back(
                        {i, Violation::Kind::forbidden_component, VertexSet::of(comp)});
    }
    report.ok = report.violations.empty();
    return report;
}

bool verify_coloring(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.n())
        throw BadParameter("verify_coloring: assignment is not total");
    for (int c : colors)
        if (c < 0) throw BadParameter("verify_coloring: assignment is not total");
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.neighbors(v))
            if (w > v && colors[v] == colors[w]) return false;
    return true;
}

namespace {

bool assignment_valid(const Instance& inst, const std::vector<int>& part) {
    const Graph& g = inst.graph();
    const auto& r = inst.targets();
    for (int v = 0; v < g.n(); ++v) {
        int d = 0;
        for (int w : g.neighbors(v))
            if (part[w] == part[v]) ++d;
        if (d > r[part[v]]) return false;
    }
    if (inst.mode() == Mode::main) {
        for (int i = 0; i < inst.k(); ++i) {
            if (inst.families()[i].kind == PermissibleFamily::Kind::empty) continue;
            for (auto& comp : components_of_part(g, part, i))
                if (forbidden_component(inst.families()[i], g, comp)) return false;
        }
    }
    return true;
}

}  // namespace

bool oracle_partition_exists(const Instance& inst) {
    const int n = inst.graph().n();
    const int k = inst.k();
    double total = 1.0;
    for (int i = 0; i < n; ++i) total *= k;
    if (total > 2e6) throw SizeGuardExceeded("oracle_partition_exists: k^n > 2e6");
    if (n == 0) return true;

    // Parts are interchangeable when targets and family kinds all agree;
    // custom predicates are not comparable, so they never qualify.
    bool symmetric = true;
    for (int i = 0; i < k; ++i) {
        if (inst.families()[i].kind == PermissibleFamily::Kind::custom) symmetric = false;
        if (inst.targets()[i] != inst.targets()[0] ||
            inst.families()[i].kind != inst.families()[0].kind)
            symmetric = false;
    }

    std::vector<int> part(n, 0);
    // Odometer over assignments; vertex 0 stays in part 0 when parts are
    // interchangeable.
    const int first_free = symmetric ? 1 : 0;
    while (true) {
        if (assignment_valid(inst, part)) return true;
        int pos = n - 1;
        while (pos >= first_free && part[pos] == k - 1) part[pos--] = 0;
        if (pos < first_free) return false;
        ++part[pos];
    }
}

namespace {

bool color_backtrack(const Graph& g, std::vector<int>& colors, int v, int limit) {
    if (v == g.n()) return true;
    for (int c = 0; c < limit; ++c) {
        bool clash = false;
        for (int w : g.neighbors(v))
            if (w < v && colors[w] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        colors[v] = c;
        if (color_backtrack(g, colors, v + 1, limit)) return true;
    }
    colors[v] = -1;
    return false;
}

}  // namespace

int oracle_chromatic(const Graph& g) {
    if (g.n() > 10) throw SizeGuardExceeded("oracle_chromatic: n > 10");
    if (g.n() == 0) return 0;
    for (int c = 1; c <= g.n(); ++c) {
        std::vector<int> colors(g.n(), -1);
        if (color_backtrack(g, colors, 0, c)) return c;
    }
    return g.n();
}

}  // namespace defpart
