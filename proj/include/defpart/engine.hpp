#ifndef DEFPART_ENGINE_HPP
#define DEFPART_ENGINE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "defpart/errors.hpp"
#include "defpart/graph.hpp"
#include "defpart/permissible.hpp"

namespace defpart {

enum class Mode { main, lovasz };

/// A partitioning problem: graph, per-part degree targets r_0..r_{k-1},
/// the forbidden family attached to each part, and the mode deciding
/// the hypothesis threshold. Construction validates the hypothesis:
///   main:   sum r_i >= max_degree + 2 - k
///   lovasz: sum r_i >= max_degree + 1 - k (all families empty)
/// Immutable and shareable; independent solves may run concurrently.
class Instance {
public:
    Instance(Graph g, std::vector<int> targets, std::vector<PermissibleFamily> families,
             Mode mode);

    /// Attaches the standard families: non-complete r-regular graphs
    /// for targets >= 2 in main mode, empty families otherwise.
    static Instance with_default_families(Graph g, std::vector<int> targets, Mode mode);

    /// Standard families but no hypothesis check, for the oracle and
    /// verification paths that must accept instances below the
    /// threshold. solve on such an instance may raise NoEscape.
    static Instance unchecked(Graph g, std::vector<int> targets, Mode mode);

    const Graph& graph() const { return g_; }
    Mode mode() const { return mode_; }
    int k() const { return static_cast<int>(targets_.size()); }
    const std::vector<int>& targets() const { return targets_; }
    const std::vector<PermissibleFamily>& families() const { return families_; }
    int max_degree() const { return max_degree_; }

private:
    struct NoHypothesisCheck {};
    Instance(Graph g, std::vector<int> targets, std::vector<PermissibleFamily> families,
             Mode mode, NoHypothesisCheck);
    void validate_common() const;

    Graph g_;
    std::vector<int> targets_;
    std::vector<PermissibleFamily> families_;
    Mode mode_;
    int max_degree_;
};

/// Lexicographic objective (f, c, p): edge surplus over the degree
/// targets, total component count, forbidden component count.
struct Potential {
    long long f = 0;
    long long c = 0;
    long long p = 0;
    bool operator==(const Potential&) const = default;
    auto operator<=>(const Potential&) const = default;
};

/// Vertex-to-part assignment with incrementally maintained counts of
/// each vertex's neighbors per part, plus per-part sizes and induced
/// edge counts.
class Partition {
public:
    Partition(const Graph& g, int k, std::vector<int> assignment);

    int n() const { return static_cast<int>(part_.size()); }
    int k() const { return k_; }
    int part_of(int v) const { return part_[v]; }
    int degree_in_part(int v, int j) const { return deg_[static_cast<size_t>(v) * k_ + j]; }
    int degree_own(int v) const { return degree_in_part(v, part_[v]); }
    long long part_edges(int i) const { return edges_[i]; }
    int part_size(int i) const { return size_[i]; }
    const std::vector<int>& assignment() const { return part_; }
    VertexSet part_vertices(int i) const;

    void move(int v, int to);
    void restore(const std::vector<int>& assignment);

    /// Recomputes every cache from scratch and compares; throws on any
    /// mismatch. Used by the paranoid solve mode and by tests.
    void check_consistent() const;

private:
    void rebuild();

    const Graph* g_;
    int k_;
    std::vector<int> part_;
    std::vector<int> deg_;  // n * k, neighbors of v inside part j
    std::vector<long long> edges_;
    std::vector<int> size_;
};

enum class TraceEvent { overflow, chain_step, chain_commit, repair_x, repair_xt, repair_z, rollback };

const char* trace_event_name(TraceEvent e);

struct TraceEntry {
    TraceEvent event;
    int vertex = -1;  // -1 for rollback entries
    int from = -1;
    int to = -1;      // rollback: chain step index restored to
    Potential after{};
    bool commit = false;
};

/// Audit trail of every accepted move. Counters are always maintained;
/// entries (with full potentials) only when `record` is set.
struct MoveTrace {
    bool record = false;
    std::vector<TraceEntry> entries;
    long long moves = 0;
    long long commits = 0;
    long long chains = 0;
    long long max_chain_len = 0;
};

// Engine-internal invariant failures carry the trace for post-mortems.
struct InvariantViolation : Error {
    InvariantViolation(const std::string& msg, MoveTrace t = {})
        : Error(msg), trace(std::move(t)) {}
    MoveTrace trace;
};

struct ChainOverflow : Error {
    ChainOverflow(const std::string& msg, MoveTrace t = {}) : Error(msg), trace(std::move(t)) {}
    MoveTrace trace;
};

struct SolveConfig {
    bool record_trace = false;
    long long chain_cap = 0;  // 0: default 10 * n * k
    bool paranoid = false;    // recheck partition caches after every move
};

// The partition references the instance's graph; keep the instance
// alive as long as the result is used.
struct SolveResult {
    Partition partition;
    MoveTrace trace;
};

Potential potential(const Instance& inst, const Partition& p);

/// Greedy start: vertices in id order, each placed into the part with
/// maximum slack r_j - d(v, V_j) over already-placed vertices, ties to
/// the lowest index. Deterministic; the seed is accepted for interface
/// stability only.
Partition initial_partition(const Instance& inst, std::uint64_t seed);

/// Among parts j != from with d(x, V_j) <= r_j, the one with maximum
/// slack r_j - d, ties broken toward targets >= 1 when
/// prefer_positive_target is set, then toward the lowest index.
std::optional<int> find_escape_part(const Instance& inst, const Partition& p, int x, int from,
                                    bool prefer_positive_target = false);

/// Moves the lowest-id vertex exceeding its part's target until none
/// does. Every move strictly decreases f.
void reduce_overflow(const Instance& inst, Partition& p, MoveTrace& trace);

/// Lowest part index, then lowest min-vertex-id component whose family
/// contains it; nullopt when the partition is already valid.
std::optional<std::pair<int, VertexSet>> find_bad_component(const Instance& inst,
                                                            const Partition& p);

/// Dissolves one forbidden component: walks the move chain, committing
/// on any improvement, and on a repetition-key collision rolls back and
/// performs the independent-set / x_t / common-witness repair whose
/// final move strictly decreases f.
void chain_repair(const Instance& inst, Partition& p, const std::pair<int, VertexSet>& start,
                  MoveTrace& trace, long long chain_cap = 0, bool paranoid = false);

/// reduce_overflow, then repeatedly chain_repair the first forbidden
/// component until none remains. The result satisfies every degree cap
/// and, in main mode, contains no forbidden components.
SolveResult solve(const Instance& inst, std::uint64_t seed, const SolveConfig& config = {});

}  // namespace defpart

#endif
