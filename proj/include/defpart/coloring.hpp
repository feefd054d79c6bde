#ifndef DEFPART_COLORING_HPP
#define DEFPART_COLORING_HPP

#include <string>
#include <vector>

#include "defpart/engine.hpp"
#include "defpart/graph.hpp"

namespace defpart {

/// Parameter selection for the coloring drivers: how many parts, which
/// degree targets, and how many colors each part is entitled to.
struct ColoringPlan {
    std::string kind;  // "kostochka" or "cliquefree"
    bool economical = false;
    std::vector<int> targets;
    std::vector<int> budgets;
    int claimed_total = 0;

    int k() const { return static_cast<int>(targets.size()); }
};

/// ceil((delta+2)/3) parts with target 2 and budget 3 each; when
/// economical and delta ≡ 2 (mod 3) the last part becomes an
/// independent set (target 0, budget 1).
ColoringPlan kostochka_plan(int delta, bool economical);

/// Targets r with budget r each. Non-economical: ceil((delta+2)/(r+1))
/// parts. Economical: floor((delta+2)/(r+1)) parts at r plus
/// delta+2-(r+1)*floor(...) independent sets, giving a total budget of
/// delta+2-floor((delta+2)/(r+1)). Requires r >= 2.
ColoringPlan clique_free_plan(int delta, int r, bool economical);

struct PartColoring {
    std::vector<std::pair<int, int>> colors;  // (vertex, local color)
    int used = 0;
    std::vector<VertexSet> flagged;  // components that needed more than the budget
};

/// Greedy coloring of each component of G[part] along its degeneracy
/// order. Components exceeding the budget (the complete components the
/// partition may legitimately contain) are flagged, not rejected.
PartColoring color_part(const Graph& g, const VertexSet& part, int budget);

struct ColoringResult {
    std::vector<int> colors;
    int used = 0;
    int bound = 0;
    ColoringPlan plan;
};

/// Partitions with the economical clique-free plan and colors each part
/// with a disjoint palette; at most delta+2-floor((delta+2)/(r+1))
/// colors on a K_{r+1}-free graph. Throws NotCliqueFree.
ColoringResult chromatic_upper(const Graph& g, int r);

/// General driver behind chromatic_upper with the economical switch
/// exposed.
ColoringResult clique_free_color(const Graph& g, int r, bool economical);

/// Partition parts are disjoint unions of paths on a triangle-free
/// graph, so two colors per positive part suffice. Throws
/// NotTriangleFree.
ColoringResult triangle_free_color(const Graph& g, bool economical = true);

}  // namespace defpart

#endif
