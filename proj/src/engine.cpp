#include "defpart/engine.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>

namespace defpart {

Instance::Instance(Graph g, std::vector<int> targets, std::vector<PermissibleFamily> families,
                   Mode mode, NoHypothesisCheck)
    : g_(std::move(g)),
      targets_(std::move(targets)),
      families_(std::move(families)),
      mode_(mode),
      max_degree_(defpart::max_degree(g_)) {
    validate_common();
}

Instance::Instance(Graph g, std::vector<int> targets, std::vector<PermissibleFamily> families,
                   Mode mode)
    : Instance(std::move(g), std::move(targets), std::move(families), mode, NoHypothesisCheck{}) {
    long long sum = 0;
    for (int r : targets_) sum += r;
    const long long k = static_cast<long long>(targets_.size());
    const long long required =
        mode_ == Mode::main ? max_degree_ + 2 - k : max_degree_ + 1 - k;
    if (sum < required)
        throw HypothesisNotMet("sum of degree targets " + std::to_string(sum) + " < " +
                               std::to_string(required) + " (max degree " +
                               std::to_string(max_degree_) + ", k " + std::to_string(k) + ")");
}

void Instance::validate_common() const {
    if (targets_.empty()) throw BadParameter("instance: k must be at least 1");
    if (families_.size() != targets_.size())
        throw BadParameter("instance: one family per part required");
    for (size_t i = 0; i < targets_.size(); ++i) {
        if (targets_[i] < 0) throw BadParameter("instance: negative degree target");
        if (families_[i].r != targets_[i])
            throw BadParameter("instance: family degree target mismatch at part " +
                               std::to_string(i));
        if (mode_ == Mode::lovasz && families_[i].kind != PermissibleFamily::Kind::empty)
            throw BadParameter("instance: lovasz mode requires empty families");
    }
}

namespace {

std::vector<PermissibleFamily> default_families(const std::vector<int>& targets, Mode mode) {
    std::vector<PermissibleFamily> fams;
    fams.reserve(targets.size());
    for (int r : targets) {
        if (mode == Mode::main && r >= 2)
            fams.push_back(PermissibleFamily::non_complete_regular(r));
        else
            fams.push_back(PermissibleFamily::empty_family(r));
    }
    return fams;
}

}  // namespace

Instance Instance::with_default_families(Graph g, std::vector<int> targets, Mode mode) {
    auto fams = default_families(targets, mode);
    return Instance(std::move(g), std::move(targets), std::move(fams), mode);
}

Instance Instance::unchecked(Graph g, std::vector<int> targets, Mode mode) {
    auto fams = default_families(targets, mode);
    return Instance(std::move(g), std::move(targets), std::move(fams), mode,
                    NoHypothesisCheck{});
}

Partition::Partition(const Graph& g, int k, std::vector<int> assignment)
    : g_(&g), k_(k), part_(std::move(assignment)) {
    if (k_ < 1) throw BadParameter("partition: k must be at least 1");
    if (static_cast<int>(part_.size()) != g.n())
        throw BadParameter("partition: assignment size mismatch");
    for (int p : part_)
        if (p < 0 || p >= k_) throw BadParameter("partition: part index out of range");
    rebuild();
}

void Partition::rebuild() {
    const int n = g_->n();
    deg_.assign(static_cast<size_t>(n) * k_, 0);
    edges_.assign(k_, 0);
    size_.assign(k_, 0);
    for (int v = 0; v < n; ++v) ++size_[part_[v]];
    for (int v = 0; v < n; ++v)
        for (int w : g_->neighbors(v)) ++deg_[static_cast<size_t>(v) * k_ + part_[w]];
    for (int v = 0; v < n; ++v) edges_[part_[v]] += degree_own(v);
    for (int i = 0; i < k_; ++i) edges_[i] /= 2;
}

VertexSet Partition::part_vertices(int i) const {
    std::vector<int> out;
    for (int v = 0; v < n(); ++v)
        if (part_[v] == i) out.push_back(v);
    return VertexSet::of(std::move(out));
}

void Partition::move(int v, int to) {
    const int from = part_[v];
    if (from == to) throw InvariantViolation("partition: move to the same part");
    edges_[from] -= degree_in_part(v, from);
    edges_[to] += degree_in_part(v, to);
    --size_[from];
    ++size_[to];
    part_[v] = to;
    for (int w : g_->neighbors(v)) {
        --deg_[static_cast<size_t>(w) * k_ + from];
        ++deg_[static_cast<size_t>(w) * k_ + to];
    }
}

void Partition::restore(const std::vector<int>& assignment) {
    if (assignment.size() != part_.size())
        throw InvariantViolation("partition: restore size mismatch");
    part_ = assignment;
    rebuild();
}

void Partition::check_consistent() const {
    Partition fresh(*g_, k_, part_);
    if (fresh.deg_ != deg_ || fresh.edges_ != edges_ || fresh.size_ != size_)
        throw InvariantViolation("partition: cached degrees diverged from recomputation");
}

const char* trace_event_name(TraceEvent e) {
    switch (e) {
        case TraceEvent::overflow: return "overflow";
        case TraceEvent::chain_step: return "chain-step";
        case TraceEvent::chain_commit: return "chain-commit";
        case TraceEvent::repair_x: return "repair-X";
        case TraceEvent::repair_xt: return "repair-xt";
        case TraceEvent::repair_z: return "repair-z";
        case TraceEvent::rollback: return "rollback";
    }
    return "?";
}

Potential potential(const Instance& inst, const Partition& p) {
    Potential pot;
    const auto& r = inst.targets();
    for (int i = 0; i < inst.k(); ++i)
        pot.f += p.part_edges(i) - static_cast<long long>(r[i]) * p.part_size(i);
    for (int i = 0; i < inst.k(); ++i) {
        auto comps = induced_components(inst.graph(), p.part_vertices(i));
        pot.c += static_cast<long long>(comps.size());
        const auto& fam = inst.families()[i];
        if (fam.kind == PermissibleFamily::Kind::empty) continue;
        for (const auto& comp : comps)
            if (contains(fam, inst.graph(), comp)) ++pot.p;
    }
    return pot;
}

Partition initial_partition(const Instance& inst, std::uint64_t /*seed*/) {
    const Graph& g = inst.graph();
    const auto& r = inst.targets();
    const int n = g.n(), k = inst.k();
    std::vector<int> part(n, -1);
    std::vector<int> placed(static_cast<size_t>(n) * k, 0);
    for (int v = 0; v < n; ++v) {
        int best = 0;
        int best_slack = r[0] - placed[static_cast<size_t>(v) * k];
        for (int j = 1; j < k; ++j) {
            int slack = r[j] - placed[static_cast<size_t>(v) * k + j];
            if (slack > best_slack) {
                best_slack = slack;
                best = j;
            }
        }
        part[v] = best;
        for (int w : g.neighbors(v)) ++placed[static_cast<size_t>(w) * k + best];
    }
    return Partition(g, k, std::move(part));
}

std::optional<int> find_escape_part(const Instance& inst, const Partition& p, int x, int from,
                                    bool prefer_positive_target) {
    const auto& r = inst.targets();
    std::optional<int> best;
    int best_slack = 0;
    bool best_pos = false;
    for (int j = 0; j < inst.k(); ++j) {
        if (j == from) continue;
        int d = p.degree_in_part(x, j);
        if (d > r[j]) continue;
        int slack = r[j] - d;
        bool pos = !prefer_positive_target || r[j] >= 1;
        if (!best || slack > best_slack || (slack == best_slack && pos && !best_pos)) {
            best = j;
            best_slack = slack;
            best_pos = pos;
        }
    }
    return best;
}

namespace {

void apply_move(const Instance& inst, Partition& p, MoveTrace& trace, int v, int to,
                TraceEvent event, bool commit, bool paranoid) {
    const int from = p.part_of(v);
    p.move(v, to);
    ++trace.moves;
    if (commit) ++trace.commits;
    if (trace.record) trace.entries.push_back({event, v, from, to, potential(inst, p), commit});
    if (paranoid) p.check_consistent();
}

void reduce_overflow_impl(const Instance& inst, Partition& p, MoveTrace& trace, bool paranoid) {
    const Graph& g = inst.graph();
    const auto& r = inst.targets();
    std::set<int> over;
    for (int v = 0; v < g.n(); ++v)
        if (p.degree_own(v) > r[p.part_of(v)]) over.insert(v);
    auto refresh = [&](int v) {
        if (p.degree_own(v) > r[p.part_of(v)])
            over.insert(v);
        else
            over.erase(v);
    };
    while (!over.empty()) {
        const int x = *over.begin();
        auto esc = find_escape_part(inst, p, x, p.part_of(x));
        if (!esc)
            throw NoEscape("reduce_overflow: no part can absorb vertex " + std::to_string(x));
        apply_move(inst, p, trace, x, *esc, TraceEvent::overflow, true, paranoid);
        refresh(x);
        for (int w : g.neighbors(x)) refresh(w);
    }
}

struct ChainStep {
    int part;                   // i_j
    int x;                      // x_j
    VertexSet comp;             // A_j
    std::vector<int> snapshot;  // assignment before x_j moved
};

long long f_value(const Instance& inst, const Partition& p) {
    long long f = 0;
    for (int i = 0; i < inst.k(); ++i)
        f += p.part_edges(i) - static_cast<long long>(inst.targets()[i]) * p.part_size(i);
    return f;
}

// Rolls back to the snapshot of step s and performs the repair: move
// X = {x_{s+1}..x_{t-1}} still in part i_s out, move x_t in, then move
// the common witness z out for a strict f decrease.
void collision_repair(const Instance& inst, Partition& p, MoveTrace& trace,
                      const std::vector<ChainStep>& steps, size_t s, bool paranoid) {
    const Graph& g = inst.graph();
    const auto& r = inst.targets();
    const size_t t = steps.size() - 1;
    const int i_s = steps[s].part;
    const int x_s = steps[s].x;
    const int x_t = steps[t].x;
    const int r_s = r[i_s];
    const VertexSet b = steps[s].comp.minus(x_s);

    const long long f_entry = f_value(inst, p);
    p.restore(steps[s].snapshot);
    if (trace.record)
        trace.entries.push_back({TraceEvent::rollback, -1, -1, static_cast<int>(s),
                                 potential(inst, p), false});

    std::vector<int> moved_out;
    for (size_t j = s + 1; j < t; ++j)
        if (p.part_of(steps[j].x) == i_s) moved_out.push_back(steps[j].x);
    std::sort(moved_out.begin(), moved_out.end());
    for (size_t a = 0; a < moved_out.size(); ++a)
        for (size_t c = a + 1; c < moved_out.size(); ++c)
            if (g.adjacent(moved_out[a], moved_out[c]))
                throw InvariantViolation("repair: X is not independent", trace);

    for (int x : moved_out) {
        if (p.degree_in_part(x, i_s) < r_s)
            throw InvariantViolation("repair: X member below target degree", trace);
        auto esc = find_escape_part(inst, p, x, i_s);
        if (!esc) throw InvariantViolation("repair: no escape part for X member", trace);
        const long long df = (p.degree_in_part(x, *esc) - r[*esc]) -
                             (p.degree_in_part(x, i_s) - r_s);
        apply_move(inst, p, trace, x, *esc, TraceEvent::repair_x, df < 0, paranoid);
        if (df < 0) return;  // strict improvement; take it
    }

    const int i_t = p.part_of(x_t);
    if (i_t == i_s) throw InvariantViolation("repair: x_t already sits in part i_s", trace);
    if (p.degree_in_part(x_t, i_t) < r[i_t])
        throw InvariantViolation("repair: x_t below target degree in its own part", trace);
    if (p.degree_in_part(x_t, i_s) != r_s)
        throw InvariantViolation("repair: x_t degree into part i_s is not exactly the target",
                                 trace);
    if (degree_in(g, b, x_t) != r_s)
        throw InvariantViolation("repair: x_t neighborhood inside B has wrong size", trace);
    apply_move(inst, p, trace, x_t, i_s, TraceEvent::repair_xt, false, paranoid);

    int z = -1;
    try {
        z = find_common_witness(inst.families()[i_s], g, b, x_t, x_s);
    } catch (const WitnessMissing& e) {
        throw InvariantViolation(std::string("repair: ") + e.what(), trace);
    }
    if (p.part_of(z) != i_s) throw InvariantViolation("repair: witness left part i_s", trace);
    if (p.degree_in_part(z, i_s) < r_s + 1)
        throw InvariantViolation("repair: witness degree too small for a strict decrease", trace);
    auto esc = find_escape_part(inst, p, z, i_s);
    if (!esc) throw InvariantViolation("repair: no escape part for witness", trace);
    apply_move(inst, p, trace, z, *esc, TraceEvent::repair_z, true, paranoid);

    if (f_value(inst, p) >= f_entry)
        throw InvariantViolation("repair: f did not decrease", trace);
}

}  // namespace

void reduce_overflow(const Instance& inst, Partition& p, MoveTrace& trace) {
    reduce_overflow_impl(inst, p, trace, false);
}

std::optional<std::pair<int, VertexSet>> find_bad_component(const Instance& inst,
                                                            const Partition& p) {
    for (int i = 0; i < inst.k(); ++i) {
        const auto& fam = inst.families()[i];
        if (fam.kind == PermissibleFamily::Kind::empty) continue;
        for (const auto& comp : induced_components(inst.graph(), p.part_vertices(i)))
            if (contains(fam, inst.graph(), comp)) return std::make_pair(i, comp);
    }
    return std::nullopt;
}

void chain_repair(const Instance& inst, Partition& p, const std::pair<int, VertexSet>& start,
                  MoveTrace& trace, long long chain_cap, bool paranoid) {
    const Graph& g = inst.graph();
    const auto& r = inst.targets();
    if (chain_cap <= 0) chain_cap = 10LL * std::max(1, g.n()) * inst.k();

    int part = start.first;
    VertexSet comp = start.second;
    if (!contains(inst.families()[part], g, comp))
        throw InvariantViolation("chain: start component is not forbidden", trace);

    std::vector<ChainStep> steps;
    std::map<VertexSet, size_t> seen;
    std::set<int> used;
    std::optional<int> prev_x;

    while (true) {
        if (static_cast<long long>(steps.size()) >= chain_cap)
            throw ChainOverflow("chain: step cap " + std::to_string(chain_cap) + " exceeded",
                                trace);

        int x = -1;
        try {
            x = pick_removable(inst.families()[part], g, comp, prev_x);
        } catch (const WitnessMissing& e) {
            throw InvariantViolation(std::string("chain: ") + e.what(), trace);
        }
        if (!used.insert(x).second)
            throw InvariantViolation("chain: vertex " + std::to_string(x) + " picked twice",
                                     trace);
        if (p.degree_own(x) != r[part])
            throw InvariantViolation("chain: picked vertex degree differs from target", trace);

        steps.push_back({part, x, comp, p.assignment()});
        seen.emplace(comp.minus(x), steps.size() - 1);  // keeps the earliest step on repeats

        auto target = find_escape_part(inst, p, x, part, /*prefer_positive_target=*/true);
        if (!target) throw InvariantViolation("chain: no escape part", trace);

        const long long df = p.degree_in_part(x, *target) - r[*target];

        // Components of the target part that x will touch, before moving.
        auto target_comps = induced_components(g, p.part_vertices(*target));
        std::vector<int> joined;
        for (size_t ci = 0; ci < target_comps.size(); ++ci)
            for (int w : g.neighbors(x))
                if (p.part_of(w) == *target && target_comps[ci].contains(w)) {
                    joined.push_back(static_cast<int>(ci));
                    break;
                }
        std::vector<int> merged{x};
        for (int ci : joined)
            merged.insert(merged.end(), target_comps[ci].ids().begin(),
                          target_comps[ci].ids().end());
        const VertexSet grown = VertexSet::of(std::move(merged));

        // Commit on any improvement: f drops (slack at the target), c
        // drops (two or more components merged), or p drops (the grown
        // component left the family; also covers the bare singleton
        // landing in a zero-target part).
        const bool commit = df < 0 || joined.size() >= 2 ||
                            !contains(inst.families()[*target], g, grown);
        apply_move(inst, p, trace, x, *target,
                   commit ? TraceEvent::chain_commit : TraceEvent::chain_step, commit, paranoid);
        if (commit) {
            trace.max_chain_len = std::max(trace.max_chain_len,
                                           static_cast<long long>(steps.size()));
            return;
        }

        const VertexSet key = grown.minus(x);
        auto hit = seen.find(key);
        if (hit != seen.end() && hit->second < steps.size() - 1) {
            trace.max_chain_len = std::max(trace.max_chain_len,
                                           static_cast<long long>(steps.size()));
            collision_repair(inst, p, trace, steps, hit->second, paranoid);
            return;
        }

        prev_x = x;
        part = *target;
        comp = grown;
    }
}

SolveResult solve(const Instance& inst, std::uint64_t seed, const SolveConfig& config) {
    Partition p = initial_partition(inst, seed);
    MoveTrace trace;
    trace.record = config.record_trace;

    reduce_overflow_impl(inst, p, trace, config.paranoid);
    if (inst.mode() == Mode::main) {
        const Graph& g = inst.graph();
        long long maxr = 0;
        for (int t : inst.targets()) maxr = std::max<long long>(maxr, t);
        // Coarse termination guard: (m + maxr*n + 1)(n+1)^2 commits.
        const long long base = g.m() + maxr * g.n() + 1;
        const long long sq = (g.n() + 1LL) * (g.n() + 1LL);
        const long long budget =
            base <= std::numeric_limits<long long>::max() / sq - 16
                ? base * sq + 16
                : std::numeric_limits<long long>::max();
        while (auto bad = find_bad_component(inst, p)) {
            ++trace.chains;
            chain_repair(inst, p, *bad, trace, config.chain_cap, config.paranoid);
            reduce_overflow_impl(inst, p, trace, config.paranoid);
            if (trace.commits > budget)
                throw InvariantViolation("solve: commit budget exceeded", trace);
        }
    }
    return {std::move(p), std::move(trace)};
}

}  // namespace defpart
