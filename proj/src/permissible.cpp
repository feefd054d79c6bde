#include "defpart/permissible.hpp"

#include <string>
#include <utility>

#include "defpart/errors.hpp"

namespace defpart {

PermissibleFamily PermissibleFamily::empty_family(int r) {
    if (r < 0) throw BadParameter("family: r < 0");
    return PermissibleFamily{r, Kind::empty, nullptr};
}

PermissibleFamily PermissibleFamily::non_complete_regular(int r) {
    if (r < 2) throw BadParameter("non_complete_regular family requires r >= 2");
    return PermissibleFamily{r, Kind::non_complete_regular, nullptr};
}

PermissibleFamily PermissibleFamily::custom_family(
    int r, std::function<bool(const Graph&, const VertexSet&)> predicate) {
    if (r < 2) throw BadParameter("custom family requires r >= 2");
    if (!predicate) throw BadParameter("custom family requires a predicate");
    return PermissibleFamily{r, Kind::custom, std::move(predicate)};
}

bool contains(const PermissibleFamily& fam, const Graph& g, const VertexSet& comp) {
    switch (fam.kind) {
        case PermissibleFamily::Kind::empty:
            return false;
        case PermissibleFamily::Kind::non_complete_regular:
            // r-regular and not K_{r+1}; an r-regular graph is complete
            // exactly when it has r+1 vertices.
            return !comp.empty() && is_regular(g, comp, fam.r) && comp.size() != fam.r + 1 &&
                   is_connected_induced(g, comp);
        case PermissibleFamily::Kind::custom:
            return fam.predicate(g, comp);
    }
    return false;
}

int pick_removable(const PermissibleFamily& fam, const Graph& g, const VertexSet& comp,
                   std::optional<int> avoid) {
    // y may be removed iff it is not an articulation point of the
    // component, so one lowpoint pass answers all candidates.
    VertexSet candidates = degree_r_vertices(g, comp, fam.r);
    VertexSet removable = non_cut_vertices(g, comp);
    for (int y : candidates) {
        if (avoid && (y == *avoid || g.adjacent(*avoid, y))) continue;
        if (removable.contains(y)) return y;
    }
    throw WitnessMissing("pick_removable: no removable non-neighbor of degree " +
                         std::to_string(fam.r));
}

int find_common_witness(const PermissibleFamily& fam, const Graph& g, const VertexSet& b, int x_t,
                        int x_s) {
    VertexSet with_xs = b.plus(x_s);
    for (int z : b) {
        if (!g.adjacent(z, x_t) || !g.adjacent(z, x_s)) continue;
        if (degree_in(g, with_xs, z) == fam.r) return z;
    }
    throw WitnessMissing("find_common_witness: no common neighbor of degree " +
                         std::to_string(fam.r));
}

}  // namespace defpart
