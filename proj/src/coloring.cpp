#include "defpart/coloring.hpp"

#include <algorithm>

namespace defpart {

ColoringPlan kostochka_plan(int delta, bool economical) {
    if (delta < 0) throw BadParameter("kostochka_plan: negative delta");
    ColoringPlan plan;
    plan.kind = "kostochka";
    const int k = (delta + 2 + 2) / 3;  // ceil((delta+2)/3)
    plan.targets.assign(k, 2);
    plan.budgets.assign(k, 3);
    if (economical && delta % 3 == 2) {
        plan.economical = true;
        plan.targets.back() = 0;
        plan.budgets.back() = 1;
    }
    for (int b : plan.budgets) plan.claimed_total += b;
    return plan;
}

ColoringPlan clique_free_plan(int delta, int r, bool economical) {
    if (r < 2) throw BadParameter("clique_free_plan: r must be at least 2");
    if (delta < 0) throw BadParameter("clique_free_plan: negative delta");
    ColoringPlan plan;
    plan.kind = "cliquefree";
    if (!economical) {
        const int k = (delta + 2 + r) / (r + 1);  // ceil((delta+2)/(r+1))
        plan.targets.assign(k, r);
        plan.budgets.assign(k, r);
    } else {
        plan.economical = true;
        const int k0 = (delta + 2) / (r + 1);
        const int singles = delta + 2 - (r + 1) * k0;
        plan.targets.assign(k0, r);
        plan.budgets.assign(k0, r);
        plan.targets.insert(plan.targets.end(), singles, 0);
        plan.budgets.insert(plan.budgets.end(), singles, 1);
    }
    for (int b : plan.budgets) plan.claimed_total += b;
    return plan;
}

PartColoring color_part(const Graph& g, const VertexSet& part, int budget) {
    PartColoring pc;
    std::vector<int> color_of(g.n(), -1);
    for (const auto& comp : induced_components(g, part)) {
        auto order = degeneracy_order(g, comp);
        int comp_used = 0;
        for (int v : order.order) {
            std::vector<char> taken(comp.size() + 1, 0);
            for (int w : g.neighbors(v))
                if (comp.contains(w) && color_of[w] >= 0) taken[color_of[w]] = 1;
            int c = 0;
            while (taken[c]) ++c;
            color_of[v] = c;
            comp_used = std::max(comp_used, c + 1);
            pc.colors.emplace_back(v, c);
        }
        if (comp_used > budget) pc.flagged.push_back(comp);
        pc.used = std::max(pc.used, comp_used);
    }
    return pc;
}

namespace {

ColoringResult run_plan(const Graph& g, const ColoringPlan& plan, int bound,
                        bool flags_forbidden) {
    Instance inst = Instance::with_default_families(g, plan.targets, Mode::main);
    SolveResult res = solve(inst, 0);

    ColoringResult out;
    out.plan = plan;
    out.bound = bound;
    out.colors.assign(g.n(), -1);
    int offset = 0;
    for (int i = 0; i < plan.k(); ++i) {
        auto pc = color_part(g, res.partition.part_vertices(i), plan.budgets[i]);
        if (flags_forbidden && !pc.flagged.empty())
            throw InvariantViolation(
                "coloring: a component exceeded its budget under a clique-free hypothesis");
        for (auto [v, c] : pc.colors) out.colors[v] = offset + c;
        offset += pc.used;
    }
    out.used = offset;
    if (out.used > out.bound)
        throw InvariantViolation("coloring: used more colors than the claimed bound");
    return out;
}

}  // namespace

ColoringResult clique_free_color(const Graph& g, int r, bool economical) {
    if (r < 2) throw BadParameter("clique_free_color: r must be at least 2");
    if (has_clique(g, r + 1)) throw NotCliqueFree("graph contains K_" + std::to_string(r + 1));
    const int delta = max_degree(g);
    ColoringPlan plan = clique_free_plan(delta, r, economical);
    const int bound = economical ? delta + 2 - (delta + 2) / (r + 1)
                                 : plan.claimed_total;
    return run_plan(g, plan, bound, /*flags_forbidden=*/true);
}

ColoringResult chromatic_upper(const Graph& g, int r) {
    return clique_free_color(g, r, /*economical=*/true);
}

ColoringResult triangle_free_color(const Graph& g, bool economical) {
    if (has_clique(g, 3)) throw NotTriangleFree("graph contains a triangle");
    const int delta = max_degree(g);
    ColoringPlan plan = kostochka_plan(delta, economical);
    // Triangle-free tightening: positive parts are unions of paths, so
    // two colors suffice instead of the general budget of three.
    for (size_t i = 0; i < plan.targets.size(); ++i)
        plan.budgets[i] = plan.targets[i] == 0 ? 1 : 2;
    plan.claimed_total = 0;
    for (int b : plan.budgets) plan.claimed_total += b;
    const int bound = plan.claimed_total;  // floor(2(delta+3)/3) when economical applies
    return run_plan(g, plan, bound, /*flags_forbidden=*/true);
}

}  // namespace defpart
