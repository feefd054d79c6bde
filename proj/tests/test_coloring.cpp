#include <doctest.h>

#include "defpart/coloring.hpp"
#include "defpart/generate.hpp"
#include "defpart/verify.hpp"

using namespace defpart;

TEST_CASE("kostochka plan arithmetic") {
    auto p = kostochka_plan(3, false);
    CHECK(p.k() == 2);
    CHECK(p.targets == std::vector<int>{2, 2});

    auto e = kostochka_plan(2, true);
    CHECK(e.k() == 2);
    CHECK(e.targets == std::vector<int>{2, 0});
    CHECK(e.economical);

    auto z = kostochka_plan(0, false);
    CHECK(z.k() == 1);
    CHECK(z.targets == std::vector<int>{2});

    // economical only bites when delta = 2 mod 3
    auto n = kostochka_plan(3, true);
    CHECK(n.targets == std::vector<int>{2, 2});
    CHECK(!n.economical);
}

TEST_CASE("clique-free plan arithmetic") {
    CHECK_THROWS_AS(clique_free_plan(5, 1, false), BadParameter);

    auto e = clique_free_plan(7, 3, true);
    CHECK(e.targets == std::vector<int>{3, 3, 0});
    CHECK(e.claimed_total == 7);  // delta+2 - floor(9/4)

    auto f = clique_free_plan(4, 2, true);
    CHECK(f.targets == std::vector<int>{2, 2});
    CHECK(f.claimed_total == 4);

    auto g = clique_free_plan(1, 2, false);
    CHECK(g.targets == std::vector<int>{2});
}

TEST_CASE("color_part") {
    auto p5 = path_graph(5);
    auto pc = color_part(p5, VertexSet::range(5), 2);
    CHECK(pc.used <= 2);
    CHECK(pc.flagged.empty());

    auto k3 = complete_graph(3);
    auto kc = color_part(k3, VertexSet::range(3), 2);
    CHECK(kc.used == 3);
    REQUIRE(kc.flagged.size() == 1);
    CHECK(kc.flagged[0] == VertexSet::range(3));

    // K_3 with budget 3 is within budget, no flag
    CHECK(color_part(k3, VertexSet::range(3), 3).flagged.empty());

    // a 2-degenerate graph with r=3 budget stays within 3 colors
    auto g = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto gc = color_part(g, VertexSet::range(5), 3);
    CHECK(gc.used <= 3);
    CHECK(gc.flagged.empty());
}

TEST_CASE("chromatic_upper") {
    auto pet = petersen_graph();
    auto res = chromatic_upper(pet, 2);
    CHECK(verify_coloring(pet, res.colors));
    CHECK(res.bound == 3 + 2 - (3 + 2) / 3);
    CHECK(res.used <= res.bound);
    CHECK(oracle_chromatic(pet) <= res.used);

    auto c5 = cycle_graph(5);
    auto cr = chromatic_upper(c5, 2);
    CHECK(verify_coloring(c5, cr.colors));
    CHECK(cr.bound == 3);
    CHECK(cr.used == 3);  // chi(C_5) = 3: the bound is tight here

    CHECK_THROWS_AS(chromatic_upper(complete_graph(4), 2), NotCliqueFree);
}

TEST_CASE("chromatic_upper leaves r-parts (r-1)-degenerate") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = triangle_free_gnp(25, 0.25, seed);
        auto res = chromatic_upper(g, 2);
        CHECK(verify_coloring(g, res.colors));
        CHECK(res.used <= res.bound);
        // re-derive the partition the driver used
        auto inst = Instance::with_default_families(g, res.plan.targets, Mode::main);
        auto sr = solve(inst, 0);
        for (int i = 0; i < inst.k(); ++i) {
            if (res.plan.targets[i] == 0) continue;
            for (const auto& comp : induced_components(g, sr.partition.part_vertices(i)))
                CHECK(degeneracy_order(g, comp).degeneracy <= res.plan.targets[i] - 1);
        }
    }
}

TEST_CASE("triangle_free_color") {
    auto pet = petersen_graph();
    auto res = triangle_free_color(pet);
    CHECK(verify_coloring(pet, res.colors));
    CHECK(res.used <= 2 * ((3 + 2 + 2) / 3));

    auto c5 = cycle_graph(5);
    auto cr = triangle_free_color(c5);
    CHECK(verify_coloring(c5, cr.colors));
    CHECK(cr.bound == 3);  // floor(2(2+3)/3)
    CHECK(cr.used == 3);

    auto edgeless = Graph::from_edges(5, {});
    auto er = triangle_free_color(edgeless);
    CHECK(er.used == 1);

    CHECK_THROWS_AS(triangle_free_color(complete_graph(3)), NotTriangleFree);
}

TEST_CASE("triangle_free_color across seeds") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto g = triangle_free_gnp(30, 0.2, seed);
        int delta = max_degree(g);
        auto res = triangle_free_color(g);
        CHECK(verify_coloring(g, res.colors));
        CHECK(res.used <= 2 * ((delta + 2 + 2) / 3));
        if (delta % 3 == 2) CHECK(res.used <= 2 * (delta + 3) / 3);
    }
}
