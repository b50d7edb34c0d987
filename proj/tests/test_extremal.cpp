#include <doctest.h>

#include <cmath>

#include "sombor/extremal.hpp"
#include "sombor/graph6.hpp"
#include "sombor/spectra.hpp"
#include "sombor/trees.hpp"

using namespace sombor;
using doctest::Approx;

TEST_CASE("tree sweep at n=9 reproduces the path/star extremes") {
    const auto maxres = tree_sweep(9, 9, ExtremalInvariant::spectral_radius, Objective::max);
    REQUIRE(maxres.size() == 1);
    REQUIRE(maxres[0].witnesses.size() == 1);
    CHECK(maxres[0].witnesses[0].graph6 == write_graph6(star_graph(9)));
    CHECK(maxres[0].optimum == Approx(std::sqrt(8.0 * 65.0)).epsilon(1e-10));
    CHECK(maxres[0].total == 47);
    CHECK(maxres[0].skipped == 0);

    const auto minres = tree_sweep(9, 9, ExtremalInvariant::spectral_radius, Objective::min);
    REQUIRE(minres[0].witnesses.size() == 1);
    const Graph witness = parse_graph6(minres[0].witnesses[0].graph6);
    CHECK(degree_profile(witness).max_deg == 2); // the path
    CHECK(minres[0].optimum == Approx(spectral_radius(path_graph(9))).epsilon(1e-10));
}

TEST_CASE("single-graph corpus returns that graph") {
    const ExtremalResult r =
        sweep({complete_graph(4)}, ExtremalInvariant::energy, Objective::min, "just K4");
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].graph6 == write_graph6(complete_graph(4)));
    CHECK(r.optimum == Approx(sombor_energy(complete_graph(4))));
}

TEST_CASE("n=3 has a single tree so min equals max") {
    for (auto obj : {Objective::min, Objective::max}) {
        const auto res = tree_sweep(3, 3, ExtremalInvariant::energy, obj);
        CHECK(res[0].witnesses.size() == 1);
        CHECK(res[0].optimum == Approx(sombor_energy(path_graph(3))));
    }
}

TEST_CASE("ties are collected and ordered") {
    // two isomorphic copies with different labelings tie exactly
    const Graph a = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    const Graph b = Graph::from_edge_list(3, {{0, 2}, {1, 2}});
    const ExtremalResult r = sweep({a, b}, ExtremalInvariant::energy, Objective::max, "pair");
    CHECK(r.witnesses.size() == 2);
    CHECK(r.witnesses[0].graph6 <= r.witnesses[1].graph6);
}

TEST_CASE("sweeps are deterministic") {
    const auto r1 = tree_sweep(8, 8, ExtremalInvariant::estrada, Objective::max, 4);
    const auto r2 = tree_sweep(8, 8, ExtremalInvariant::estrada, Objective::max, 1);
    REQUIRE(r1.size() == r2.size());
    CHECK(r1[0].optimum == r2[0].optimum);
    REQUIRE(r1[0].witnesses.size() == r2[0].witnesses.size());
    for (std::size_t i = 0; i < r1[0].witnesses.size(); ++i)
        CHECK(r1[0].witnesses[i].graph6 == r2[0].witnesses[i].graph6);
}

TEST_CASE("max tree energy dominates the star value") {
    for (int n = 4; n <= 9; ++n) {
        const auto res = tree_sweep(n, n, ExtremalInvariant::energy, Objective::max);
        const double star_energy = 2.0 * std::sqrt((n - 1.0) * (n * n - 2.0 * n + 2.0));
        CHECK(res[0].optimum >= star_energy - 1e-9);
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(sweep({}, ExtremalInvariant::energy, Objective::min, "empty"),
                    EmptyCorpusError);
    CHECK_THROWS_AS(tree_sweep(2, 2, ExtremalInvariant::energy, Objective::min),
                    SizeUnsupportedError);
    CHECK_THROWS_AS(tree_sweep(3, 13, ExtremalInvariant::energy, Objective::min),
                    SizeUnsupportedError);
}

TEST_CASE("invariant names") {
    CHECK(invariant_from_name("rho1") == ExtremalInvariant::spectral_radius);
    CHECK(invariant_from_name("spectral_radius") == ExtremalInvariant::spectral_radius);
    CHECK(invariant_from_name("sombor") == ExtremalInvariant::sombor_index);
    CHECK_FALSE(invariant_from_name("nope").has_value());
}
