#include <doctest.h>

#include <cmath>

#include "sombor/invariants.hpp"
#include "sombor/matchings.hpp"
#include "sombor/spectra.hpp"
#include "sombor/trees.hpp"
#include "support/corpus.hpp"

using namespace sombor;
using doctest::Approx;

TEST_CASE("matching coefficients of small graphs") {
    const MatchingPolynomial p4w = matching_coefficients(path_graph(4), true);
    REQUIRE(p4w.b.size() == 3);
    CHECK(p4w.b[0] == 1.0);
    CHECK(p4w.b[1] == 18.0);
    CHECK(p4w.b[2] == 25.0);

    const MatchingPolynomial p4u = matching_coefficients(path_graph(4), false);
    CHECK(p4u.b == std::vector<double>{1.0, 3.0, 1.0});

    const MatchingPolynomial star = matching_coefficients(star_graph(4), true);
    REQUIRE(star.b.size() == 3);
    CHECK(star.b[0] == 1.0);
    CHECK(star.b[1] == 30.0);
    CHECK(star.b[2] == 0.0); // stars have no 2-matchings

    CHECK_THROWS_AS(matching_coefficients(empty_graph(25), true), SizeTooLargeError);
}

TEST_CASE("b_1 equals the forgotten index on every graph") {
    corpus::for_each_labeled_graph(5, [&](const Graph& g) {
        const MatchingPolynomial mp = matching_coefficients(g, true);
        CHECK(mp.b[0] == 1.0);
        if (mp.b.size() > 1) CHECK(mp.b[1] == forgotten(g));
        for (double b : mp.b) CHECK(b >= 0.0);
    });
}

TEST_CASE("unweighted coefficients count matchings of complete bipartite graphs") {
    // m(K_{s,s}, k) = binom(s,k)^2 k!
    const MatchingPolynomial mp = matching_coefficients(complete_bipartite_graph(3, 3), false);
    REQUIRE(mp.b.size() == 4);
    CHECK(mp.b[0] == 1.0);
    CHECK(mp.b[1] == 9.0);
    CHECK(mp.b[2] == 18.0);
    CHECK(mp.b[3] == 6.0);
}

TEST_CASE("bipartite characteristic polynomial via matchings") {
    const CharPoly p4 = sombor_charpoly_bipartite(path_graph(4));
    REQUIRE(p4.coefficients.size() == 5);
    CHECK(p4.coefficients[0] == 1.0);
    CHECK(p4.coefficients[1] == 0.0);
    CHECK(p4.coefficients[2] == Approx(-18.0).epsilon(1e-13));
    CHECK(p4.coefficients[3] == 0.0);
    CHECK(p4.coefficients[4] == Approx(25.0).epsilon(1e-13));

    const CharPoly k2 = sombor_charpoly_bipartite(complete_graph(2));
    REQUIRE(k2.coefficients.size() == 3);
    CHECK(k2.coefficients[0] == 1.0);
    CHECK(k2.coefficients[1] == 0.0);
    CHECK(k2.coefficients[2] == Approx(-2.0).epsilon(1e-14));

    CHECK_THROWS_AS(sombor_charpoly_bipartite(cycle_graph(5)), NotBipartiteError);

    // odd-order trees have eigenvalue zero, so the constant term vanishes
    for (const Graph& t : all_trees(7))
        CHECK(sombor_charpoly_bipartite(t).coefficients.back() == 0.0);
}

TEST_CASE("bipartite charpoly agrees with the eigensolver characteristic polynomial") {
    auto check_graph = [](const Graph& g) {
        const CharPoly a = sombor_charpoly_bipartite(g);
        const CharPoly b = char_poly_from_spectrum(eigenvalues(sombor_matrix(g)));
        REQUIRE(a.coefficients.size() == b.coefficients.size());
        double scale = 1.0;
        for (double c : b.coefficients) scale = std::max(scale, std::abs(c));
        for (std::size_t i = 0; i < a.coefficients.size(); ++i)
            CHECK(std::abs(a.coefficients[i] - b.coefficients[i]) <= 1e-8 * scale);
    };
    for (int n = 2; n <= 9; ++n)
        for (const Graph& t : all_trees(n)) check_graph(t);
    for (int n = 2; n <= 6; ++n) corpus::for_each_connected_bipartite_graph(n, check_graph);
    for (int s = 1; s <= 6; ++s)
        for (int t = s; s + t <= 12; ++t) check_graph(complete_bipartite_graph(s, t));
}

TEST_CASE("charpoly b_k equal the matching sums exactly on forests") {
    for (int n = 2; n <= 9; ++n)
        for (const Graph& t : all_trees(n)) {
            const CharPoly poly = sombor_charpoly_bipartite(t);
            const MatchingPolynomial mp = matching_coefficients(t, true);
            for (std::size_t k = 0; k < mp.b.size(); ++k) {
                const double from_poly =
                    (k % 2 == 0 ? 1.0 : -1.0) * poly.coefficients[2 * k];
                CHECK(from_poly == Approx(mp.b[k]).epsilon(1e-12));
            }
        }
}

TEST_CASE("even cycles separate matching sums from characteristic coefficients") {
    // on C_4 the 4-cycle contributes -2 w^4 to the constant coefficient:
    // matching sums give b_2 = 128 while the true coefficient is 0
    const Graph c4 = cycle_graph(4);
    const MatchingPolynomial mp = matching_coefficients(c4, true);
    CHECK(mp.b[2] == 128.0);
    const CharPoly poly = sombor_charpoly_bipartite(c4);
    CHECK(poly.coefficients[4] == 0.0);
    CHECK(poly.coefficients[2] == Approx(-32.0).epsilon(1e-13));
    const double cycle_weight = 2.0 * std::pow(std::sqrt(8.0), 4.0);
    CHECK(mp.b[2] - poly.coefficients[4] == Approx(cycle_weight).epsilon(1e-12));
}

TEST_CASE("coefficients never increase under edge deletion") {
    corpus::for_each_connected_bipartite_graph(6, [&](const Graph& g) {
        const MatchingPolynomial before = matching_coefficients(g, true);
        for (auto [u, v] : g.edges()) {
            const MatchingPolynomial after = matching_coefficients(delete_edge(g, u, v), true);
            for (std::size_t k = 0; k < before.b.size(); ++k)
                CHECK(before.b[k] >= after.b[k]);
            CHECK(before.b[1] > after.b[1]);
        }
    });
}

TEST_CASE("coulson integral reproduces the spectral energy") {
    CHECK(coulson_energy(complete_graph(2), 1e-8).energy ==
          Approx(2.0 * std::sqrt(2.0)).epsilon(1e-7));
    CHECK(coulson_energy(path_graph(4), 1e-8).energy ==
          Approx(4.0 * std::sqrt(7.0)).epsilon(1e-7));
    CHECK(coulson_energy(empty_graph(5), 1e-8).energy == 0.0);
    CHECK_THROWS_AS(coulson_energy(cycle_graph(5), 1e-8), NotBipartiteError);

    for (int n = 2; n <= 9; ++n)
        for (const Graph& t : all_trees(n)) {
            const double oracle = sombor_energy(t);
            const double viaintegral = coulson_energy(t, 1e-8).energy;
            CHECK(std::abs(viaintegral - oracle) <=
                  std::max(1e-4 * std::abs(oracle), 1e-6));
        }
}

TEST_CASE("looser tolerances use fewer evaluations") {
    const CoulsonResult fine = coulson_energy(path_graph(8), 1e-10);
    const CoulsonResult coarse = coulson_energy(path_graph(8), 1e-2);
    CHECK(coarse.evaluations <= fine.evaluations);
    CHECK(coarse.energy == Approx(sombor_energy(path_graph(8))).epsilon(1e-2));
}

TEST_CASE("unreachable tolerances raise QuadratureFailure") {
    CHECK_THROWS_AS(coulson_energy(path_graph(6), 1e-30), QuadratureFailureError);
}
