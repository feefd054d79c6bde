#ifndef DEFPART_VERIFY_HPP
#define DEFPART_VERIFY_HPP

#include <vector>

#include "defpart/engine.hpp"
#include "defpart/graph.hpp"

namespace defpart {

struct Violation {
    enum class Kind { degree_cap, forbidden_component };
    int part;
    Kind kind;
    VertexSet witness;  // the offending vertex (degree_cap) or component
};

struct ValidityReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Recomputes every degree and component from scratch — no engine
/// caches, no shared traversal code. In lovasz mode only degree caps
/// are checked.
ValidityReport verify_partition(const Instance& inst, const Partition& p);

/// True iff no edge has both endpoints the same color.
bool verify_coloring(const Graph& g, const std::vector<int>& colors);

/// Exhaustive enumeration of all k^n assignments (SizeGuardExceeded
/// beyond 2e6). Fixes vertex 0 into part 0 when all parts are
/// interchangeable.
bool oracle_partition_exists(const Instance& inst);

/// Exact chromatic number by backtracking; n <= 10.
int oracle_chromatic(const Graph& g);

}  // namespace defpart

#endif
