#include <doctest.h>

#include <algorithm>
#include <set>

#include "defpart/errors.hpp"
#include "defpart/generate.hpp"
#include "defpart/graph.hpp"

using namespace defpart;

namespace {

// Delete-and-test oracle for non_cut_vertices, kept independent of the
// lowpoint implementation.
VertexSet non_cut_oracle(const Graph& g, const VertexSet& s) {
    std::vector<int> out;
    for (int v : s) {
        auto comps = induced_components(g, s.minus(v));
        if (comps.size() <= 1) out.push_back(v);
    }
    return VertexSet::of(out);
}

Graph two_triangles_sharing_0() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

}  // namespace

TEST_CASE("vertex set basics") {
    auto s = VertexSet::of({3, 1, 2, 1});
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK(!s.contains(0));
    CHECK(s.minus(2) == VertexSet::of({1, 3}));
    CHECK(s.plus(0) == VertexSet::of({0, 1, 2, 3}));
    CHECK(s.plus(2) == s);
    CHECK(VertexSet::range(3) == VertexSet::of({0, 1, 2}));
}

TEST_CASE("graph construction rejects loops and bad ids") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), ParseError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), ParseError);
    auto g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.m() == 2);  // duplicate collapsed
    CHECK(g.adjacent(0, 1));
    CHECK(!g.adjacent(0, 2));
}

TEST_CASE("induced components") {
    auto c5 = cycle_graph(5);
    auto comps = induced_components(c5, VertexSet::of({0, 1, 3}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet::of({0, 1}));
    CHECK(comps[1] == VertexSet::of({3}));

    CHECK(induced_components(c5, VertexSet{}).empty());

    auto pet = petersen_graph();
    auto all = induced_components(pet, VertexSet::range(10));
    REQUIRE(all.size() == 1);
    CHECK(all[0].size() == 10);
}

TEST_CASE("degree_in") {
    auto c4 = cycle_graph(4);
    CHECK(degree_in(c4, VertexSet::range(4), 0) == 2);
    CHECK(degree_in(c4, VertexSet::of({1, 3}), 0) == 2);
    CHECK(degree_in(c4, VertexSet{}, 0) == 0);
}

TEST_CASE("degree_r_vertices") {
    auto p3 = path_graph(3);
    CHECK(degree_r_vertices(p3, VertexSet::range(3), 1) == VertexSet::of({0, 2}));
    auto c4 = cycle_graph(4);
    CHECK(degree_r_vertices(c4, VertexSet::range(4), 2) == VertexSet::range(4));
    auto k3 = complete_graph(3);
    CHECK(degree_r_vertices(k3, VertexSet::range(3), 1).empty());
}

TEST_CASE("non_cut_vertices") {
    auto p3 = path_graph(3);
    CHECK(non_cut_vertices(p3, VertexSet::range(3)) == VertexSet::of({0, 2}));
    auto c5 = cycle_graph(5);
    CHECK(non_cut_vertices(c5, VertexSet::range(5)) == VertexSet::range(5));

    auto tt = two_triangles_sharing_0();
    CHECK(non_cut_vertices(tt, VertexSet::range(5)) == non_cut_oracle(tt, VertexSet::range(5)));
    CHECK(non_cut_vertices(tt, VertexSet::range(5)) == VertexSet::of({1, 2, 3, 4}));

    CHECK_THROWS_AS(non_cut_vertices(c5, VertexSet::of({0, 2})), NotConnected);
    CHECK(non_cut_vertices(c5, VertexSet::of({1})) == VertexSet::of({1}));
}

TEST_CASE("non_cut agrees with delete-and-test oracle on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = gnp(9, 0.35, seed);
        for (const auto& comp : induced_components(g, VertexSet::range(9))) {
            CHECK(non_cut_vertices(g, comp) == non_cut_oracle(g, comp));
        }
    }
}

TEST_CASE("degeneracy order") {
    CHECK(degeneracy_order(path_graph(4), VertexSet::range(4)).degeneracy == 1);
    CHECK(degeneracy_order(complete_graph(4), VertexSet::range(4)).degeneracy == 3);
    CHECK(degeneracy_order(petersen_graph(), VertexSet::range(10)).degeneracy == 3);
}

TEST_CASE("greedy along degeneracy order stays within degeneracy+1 colors") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = gnp(14, 0.3, seed);
        auto s = VertexSet::range(14);
        auto res = degeneracy_order(g, s);
        std::vector<int> color(14, -1);
        int used = 0;
        for (int v : res.order) {
            std::set<int> taken;
            for (int w : g.neighbors(v))
                if (color[w] >= 0) taken.insert(color[w]);
            int c = 0;
            while (taken.count(c)) ++c;
            color[v] = c;
            used = std::max(used, c + 1);
        }
        CHECK(used <= res.degeneracy + 1);
        int maxdeg = 0;
        for (int v : s) maxdeg = std::max(maxdeg, degree_in(g, s, v));
        CHECK(res.degeneracy <= maxdeg);
    }
}

TEST_CASE("predicates") {
    auto k3 = complete_graph(3);
    CHECK(is_complete(k3, VertexSet::range(3)));
    CHECK(is_regular(k3, VertexSet::range(3), 2));
    auto c4 = cycle_graph(4);
    CHECK(!is_complete(c4, VertexSet::range(4)));
    CHECK(is_regular(c4, VertexSet::range(4), 2));
    CHECK(max_degree(petersen_graph()) == 3);
    CHECK(!has_clique(petersen_graph(), 3));
    CHECK(has_clique(complete_graph(5), 5));
    CHECK(!has_clique(complete_graph(5), 6));
    CHECK_THROWS_AS(has_clique(k3, 13), SizeGuardExceeded);
}

TEST_CASE("non_cut matches the single-component characterization") {
    for (std::uint64_t seed = 100; seed < 115; ++seed) {
        auto g = gnp(8, 0.4, seed);
        for (const auto& comp : induced_components(g, VertexSet::range(8))) {
            if (comp.size() < 2) continue;
            auto nc = non_cut_vertices(g, comp);
            for (int v : comp) {
                bool one = induced_components(g, comp.minus(v)).size() == 1;
                CHECK(nc.contains(v) == one);
            }
        }
    }
}

TEST_CASE("degree sum identity") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = gnp(10, 0.3, seed);
        auto s = VertexSet::of({0, 2, 3, 5, 7, 9});
        long long sum = 0;
        for (int v : s) sum += degree_in(g, s, v);
        long long edges = 0;
        for (auto [u, v] : g.edges()) edges += s.contains(u) && s.contains(v);
        CHECK(sum == 2 * edges);
    }
}

TEST_CASE("components partition the set and keep edges internal") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = gnp(12, 0.2, seed);
        auto s = VertexSet::of({0, 1, 2, 4, 6, 7, 8, 10, 11});
        auto comps = induced_components(g, s);
        std::vector<int> all;
        for (const auto& c : comps)
            all.insert(all.end(), c.ids().begin(), c.ids().end());
        CHECK(VertexSet::of(all) == s);
        size_t total = 0;
        for (const auto& c : comps) total += c.size();
        CHECK(static_cast<int>(total) == s.size());
        for (auto [u, v] : g.edges()) {
            if (!s.contains(u) || !s.contains(v)) continue;
            bool same = false;
            for (const auto& c : comps) same |= c.contains(u) && c.contains(v);
            CHECK(same);
        }
    }
}
