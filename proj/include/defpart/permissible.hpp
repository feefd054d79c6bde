#ifndef DEFPART_PERMISSIBLE_HPP
#define DEFPART_PERMISSIBLE_HPP

#include <functional>
#include <optional>

#include "defpart/graph.hpp"

namespace defpart {

/// A family of connected graphs with maximum degree r that the engine
/// must not leave behind as a component. Two families ship: the empty
/// family (the only choice for r <= 1) and the family of all
/// non-complete connected r-regular graphs. A custom membership
/// predicate can be supplied for experimentation; the engine enforces
/// the removable-vertex and common-witness guarantees at use sites and
/// aborts loudly when a custom family violates them.
struct PermissibleFamily {
    enum class Kind { empty, non_complete_regular, custom };

    int r = 0;
    Kind kind = Kind::empty;
    std::function<bool(const Graph&, const VertexSet&)> predicate;  // custom only

    static PermissibleFamily empty_family(int r);
    static PermissibleFamily non_complete_regular(int r);  // r >= 2
    static PermissibleFamily custom_family(int r,
                                           std::function<bool(const Graph&, const VertexSet&)> predicate);
};

/// Is G[comp] a member? Connectivity is re-checked.
bool contains(const PermissibleFamily& fam, const Graph& g, const VertexSet& comp);

/// Smallest y of degree r in G[comp] with y not in N(avoid) ∪ {avoid}
/// and G[comp - y] connected. Throws WitnessMissing when no such y
/// exists.
int pick_removable(const PermissibleFamily& fam, const Graph& g, const VertexSet& comp,
                   std::optional<int> avoid);

/// Smallest z in b adjacent to both x_t and x_s whose degree in
/// G[b ∪ {x_s}] is exactly fam.r. Throws WitnessMissing.
int find_common_witness(const PermissibleFamily& fam, const Graph& g, const VertexSet& b, int x_t,
                        int x_s);

}  // namespace defpart

#endif
