#include <doctest.h>

#include <vector>

#include "defpart/engine.hpp"
#include "defpart/errors.hpp"
#include "defpart/generate.hpp"
#include "defpart/permissible.hpp"

using namespace defpart;

namespace {

Graph prism() {  // K_3 x K_2, 3-regular, non-complete
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                 {0, 3}, {1, 4}, {2, 5}});
}

// Small corpus of connected regular graphs with their degree.
struct RegularCase {
    Graph g;
    int r;
};

std::vector<RegularCase> regular_corpus() {
    return {
        {cycle_graph(4), 2}, {cycle_graph(5), 2}, {cycle_graph(6), 2},
        {cycle_graph(7), 2}, {complete_graph(3), 2}, {complete_graph(4), 3},
        {petersen_graph(), 3}, {prism(), 3},
    };
}

}  // namespace

TEST_CASE("family construction rules") {
    CHECK_THROWS_AS(PermissibleFamily::non_complete_regular(1), BadParameter);
    auto fam = PermissibleFamily::empty_family(1);
    CHECK(fam.kind == PermissibleFamily::Kind::empty);
    CHECK(!contains(fam, cycle_graph(4), VertexSet::range(4)));
}

TEST_CASE("contains on the shipped family") {
    auto fam2 = PermissibleFamily::non_complete_regular(2);
    CHECK(contains(fam2, cycle_graph(4), VertexSet::range(4)));
    CHECK(!contains(fam2, complete_graph(3), VertexSet::range(3)));  // complete
    CHECK(!contains(fam2, path_graph(3), VertexSet::range(3)));      // not regular
    auto fam3 = PermissibleFamily::non_complete_regular(3);
    CHECK(contains(fam3, petersen_graph(), VertexSet::range(10)));
    // disconnected union of two 2-regular components is not a member
    auto two_c4 = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                        {4, 5}, {5, 6}, {6, 7}, {7, 4}});
    CHECK(!contains(fam2, two_c4, VertexSet::range(8)));
}

TEST_CASE("pick_removable") {
    auto fam2 = PermissibleFamily::non_complete_regular(2);
    CHECK(pick_removable(fam2, cycle_graph(5), VertexSet::range(5), 0) == 2);
    CHECK(pick_removable(fam2, cycle_graph(4), VertexSet::range(4), 0) == 2);
    auto fam3 = PermissibleFamily::non_complete_regular(3);
    // Petersen: N(0) = {1, 4, 5}; smallest non-neighbor is 2 and the
    // graph is 3-connected, so removal keeps it connected.
    CHECK(pick_removable(fam3, petersen_graph(), VertexSet::range(10), 0) == 2);
    // no avoid vertex: smallest removable overall
    CHECK(pick_removable(fam2, cycle_graph(5), VertexSet::range(5), std::nullopt) == 0);
    // K_4 minus nothing: every non-neighbor set of a vertex is empty
    auto fam3b = PermissibleFamily::non_complete_regular(3);
    CHECK_THROWS_AS(pick_removable(fam3b, complete_graph(4), VertexSet::range(4), 0),
                    WitnessMissing);
}

TEST_CASE("pick_removable postconditions on the corpus") {
    for (const auto& [g, r] : regular_corpus()) {
        auto fam = PermissibleFamily::non_complete_regular(r);
        auto all = VertexSet::range(g.n());
        if (!contains(fam, g, all)) continue;
        for (int x : all) {
            int y = pick_removable(fam, g, all, x);
            CHECK(y != x);
            CHECK(!g.adjacent(x, y));
            CHECK(degree_in(g, all, y) == r);
            CHECK(is_connected_induced(g, all.minus(y)));
        }
    }
}

TEST_CASE("condition (4): removing a degree-r vertex leaves the family") {
    for (const auto& [g, r] : regular_corpus()) {
        auto fam = PermissibleFamily::non_complete_regular(r);
        auto all = VertexSet::range(g.n());
        if (!contains(fam, g, all)) continue;
        for (int x : degree_r_vertices(g, all, r))
            CHECK(!contains(fam, g, all.minus(x)));
    }
}

TEST_CASE("find_common_witness") {
    auto fam2 = PermissibleFamily::non_complete_regular(2);
    // C_4 on 0..3 plus vertex 4 adjacent to 1 and 3
    auto g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 1}, {4, 3}});
    CHECK(find_common_witness(fam2, g, VertexSet::of({1, 2, 3}), 4, 0) == 1);

    // disjoint neighborhoods inside b
    auto h = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 2}, {5, 2}});
    CHECK_THROWS_AS(find_common_witness(fam2, h, VertexSet::of({1, 3}), 4, 5), WitnessMissing);

    // K_4 minus vertex 0 as b, x_t adjacent to all of b
    auto fam3 = PermissibleFamily::non_complete_regular(3);
    auto k4p = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                     {4, 1}, {4, 2}, {4, 3}});
    CHECK(find_common_witness(fam3, k4p, VertexSet::of({1, 2, 3}), 4, 0) == 1);
}

TEST_CASE("a custom family breaking its witness obligations fails loudly") {
    // Claims every component with max degree <= 2 as a member, which
    // cannot supply a removable degree-2 vertex from a singleton. The
    // engine must abort, not emit a partition that silently ignores the
    // family.
    auto liar = PermissibleFamily::custom_family(2, [](const Graph& g, const VertexSet& comp) {
        for (int v : comp)
            if (degree_in(g, comp, v) > 2) return false;
        return !comp.empty();
    });
    auto inst = Instance(path_graph(4), {2, 2}, {liar, liar}, Mode::main);
    CHECK_THROWS_AS(solve(inst, 0), InvariantViolation);
}

// Condition (6) brute force for the shipped family on small members:
// for every x, every r-subset A of G - x, if reattaching a new vertex
// to A lands back in the family then A meets N(x).
TEST_CASE("condition (6) exhaustively on small members") {
    for (const auto& [g, r] : regular_corpus()) {
        if (g.n() > 8) continue;
        auto fam = PermissibleFamily::non_complete_regular(r);
        auto all = VertexSet::range(g.n());
        if (!contains(fam, g, all)) continue;
        for (int x = 0; x < g.n(); ++x) {
            std::vector<int> rest;
            for (int v = 0; v < g.n(); ++v)
                if (v != x) rest.push_back(v);
            const int nh = static_cast<int>(rest.size());
            for (unsigned mask = 0; mask < (1u << nh); ++mask) {
                if (__builtin_popcount(mask) != r) continue;
                std::vector<int> a;
                for (int i = 0; i < nh; ++i)
                    if (mask & (1u << i)) a.push_back(rest[i]);
                // Build H_A on the same ids: drop x, add a fresh vertex
                // joined to A. Reuse x's id for the fresh vertex.
                std::vector<std::pair<int, int>> edges;
                for (auto [u, v] : g.edges())
                    if (u != x && v != x) edges.push_back({u, v});
                for (int v : a) edges.push_back({x, v});
                auto ha = Graph::from_edges(g.n(), edges);
                if (!contains(fam, ha, all)) continue;
                bool meets = false;
                for (int v : a)
                    meets |= g.adjacent(x, v) && degree_in(g, all, v) == r;
                CHECK(meets);
            }
        }
    }
}
