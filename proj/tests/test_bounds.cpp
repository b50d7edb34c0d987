#include <doctest.h>

#include <cmath>
#include <set>

#include "sombor/bounds.hpp"
#include "sombor/graph6.hpp"
#include "sombor/invariants.hpp"
#include "sombor/spectra.hpp"
#include "sombor/trees.hpp"
#include "support/corpus.hpp"

using namespace sombor;
using doctest::Approx;

TEST_CASE("registry lookups") {
    CHECK(bound_registry().size() == 27);
    CHECK(find_bound("T3.1-L").side == BoundSide::lower);
    CHECK(find_bound("T5.4-U").target == BoundTarget::estrada);
    CHECK_THROWS_AS(find_bound("T9.9-L"), UnknownBoundError);
}

TEST_CASE("applicability follows the theorem hypotheses") {
    CHECK(applicable("T5.4-U", complete_bipartite_graph(2, 3)));
    CHECK_FALSE(applicable("C3.3-U", cycle_graph(5)));
    CHECK_FALSE(applicable("T5.2-L", empty_graph(4))); // p = q = 0
    CHECK_FALSE(applicable("T4.2-L", complete_graph(2))); // needs n >= 3
    CHECK_FALSE(applicable("T4.4-L", empty_graph(3)));    // needs an edge
    CHECK_FALSE(applicable("T4.6-L", cycle_graph(5)));    // bipartite only
    CHECK_FALSE(applicable("C4.1-L", path_graph(4)));     // complete bipartite only
    CHECK(applicable("C4.1-L", star_graph(4)));
    CHECK_FALSE(applicable("T5.3-L", empty_graph(3)));    // rank < 2
    CHECK_FALSE(applicable("C3.1-L", k2_union_graph(4))); // disconnected
    CHECK_THROWS_AS(evaluate_bound("C3.3-U", cycle_graph(5)), NotApplicableError);
}

TEST_CASE("equality cases match the closed forms") {
    // T3.2-U at K_4: rho_1 = 9 sqrt(2) and the bound is sqrt(2*3*108/4)
    const BoundReport t32 = evaluate_bound("T3.2-U", complete_graph(4));
    CHECK(t32.target_value == Approx(9.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(t32.bound_value == Approx(std::sqrt(162.0)).epsilon(1e-12));
    CHECK(t32.equality);
    CHECK(t32.holds);
    CHECK(t32.equality_family_matches);

    // T4.2-L at K_{2,3}: energy = 2 sqrt(78) = 2 sqrt(F)
    const BoundReport t42 = evaluate_bound("T4.2-L", complete_bipartite_graph(2, 3));
    CHECK(t42.target_value == Approx(2.0 * std::sqrt(78.0)).epsilon(1e-12));
    CHECK(t42.bound_value == Approx(2.0 * std::sqrt(78.0)).epsilon(1e-12));
    CHECK(t42.equality);
    CHECK(t42.equality_family_matches);

    // T4.6-L at C_4: ISI matrix is the adjacency matrix, E_ISI = 4
    const BoundReport t46 = evaluate_bound("T4.6-L", cycle_graph(4));
    CHECK(t46.target_value == Approx(8.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(t46.bound_value == Approx(8.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(t46.equality);
    CHECK(t46.equality_family_matches);

    // T4.2-U equality on the perfect matching
    const BoundReport t42u = evaluate_bound("T4.2-U", k2_union_graph(6));
    CHECK(t42u.equality);
    CHECK(t42u.equality_family_matches);

    // C3.3-U equality exactly at stars
    const BoundReport star9 = evaluate_bound("C3.3-U", star_graph(9));
    CHECK(star9.equality);
    CHECK(star9.target_value == Approx(std::sqrt(8.0 * 65.0)).epsilon(1e-12));
    const BoundReport path9 = evaluate_bound("C3.3-U", path_graph(9));
    CHECK_FALSE(path9.equality);
    CHECK(path9.equality_family_matches);
}

TEST_CASE("equality family classifiers") {
    CHECK(classify_equality_family(cycle_graph(6), "regular"));
    CHECK_FALSE(classify_equality_family(path_graph(4), "regular"));
    CHECK(classify_equality_family(empty_graph(3), "regular"));
    CHECK(classify_equality_family(star_graph(5), "star"));
    CHECK(classify_equality_family(complete_graph(2), "star"));
    CHECK_FALSE(classify_equality_family(empty_graph(1), "star"));
    CHECK_FALSE(classify_equality_family(path_graph(4), "complete_bipartite"));
    CHECK(classify_equality_family(complete_bipartite_graph(2, 3), "complete_bipartite"));
    CHECK(classify_equality_family(complete_bipartite_graph(3, 3), "balanced_complete_bipartite"));
    CHECK(classify_equality_family(complete_bipartite_graph(3, 4), "balanced_complete_bipartite"));
    CHECK_FALSE(
        classify_equality_family(complete_bipartite_graph(2, 4), "balanced_complete_bipartite"));
    CHECK(classify_equality_family(complete_graph(4), "complete"));
    CHECK(classify_equality_family(empty_graph(4), "empty"));
    CHECK(classify_equality_family(empty_graph(4), "empty_or_k2_union"));
    CHECK(classify_equality_family(k2_union_graph(6), "empty_or_k2_union"));
    CHECK_FALSE(classify_equality_family(path_graph(3), "empty_or_k2_union"));
    CHECK(classify_equality_family(complete_bipartite_graph(2, 4), "semiregular_bipartite"));
    CHECK(classify_equality_family(cycle_graph(6), "semiregular_bipartite"));
    CHECK_FALSE(classify_equality_family(path_graph(4), "semiregular_bipartite"));
    CHECK_FALSE(classify_equality_family(complete_graph(3), "never"));
    CHECK_THROWS_AS(classify_equality_family(path_graph(3), "widget"), UnknownFamilyError);
}

TEST_CASE("zero violations over trees and families") {
    std::vector<Graph> graphs;
    for (int n = 3; n <= 9; ++n)
        for (const Graph& t : all_trees(n)) graphs.push_back(t);
    for (int n = 3; n <= 10; ++n) {
        graphs.push_back(complete_graph(n));
        graphs.push_back(cycle_graph(n));
        graphs.push_back(path_graph(n));
    }
    for (int s = 1; s <= 5; ++s)
        for (int t = s; s + t <= 10; ++t) graphs.push_back(complete_bipartite_graph(s, t));

    const VerifySummary summary = verify_corpus(graphs, bound_ids(), nullptr, 2);
    CHECK(summary.graphs == static_cast<long>(graphs.size()));
    CHECK(summary.violations == 0);
    CHECK(summary.family_mismatches == 0);
    CHECK(summary.errors == 0);
    CHECK(summary.evaluated > 0);
}

TEST_CASE("equality rows for T3.1 are exactly the regular graphs") {
    corpus::for_each_connected_labeled_graph(5, [&](const Graph& g) {
        for (const char* id : {"T3.1-L", "T3.1-U"}) {
            const BoundReport rep = evaluate_bound(id, g);
            CHECK(rep.holds);
            CHECK(rep.equality == classify_equality_family(g, "regular"));
        }
    });
}

TEST_CASE("verify_corpus with an empty bound set reports nothing") {
    const VerifySummary summary = verify_corpus({complete_graph(4)}, {}, nullptr);
    CHECK(summary.evaluated == 0);
    CHECK(summary.graphs == 1);
}

TEST_CASE("verify_corpus_collect sorts by graph6 then bound id") {
    const auto [reports, summary] =
        verify_corpus_collect({complete_graph(4), path_graph(3)}, {"T3.2-U", "T3.1-L"});
    CHECK(summary.evaluated == 4);
    REQUIRE(reports.size() == 4);
    for (std::size_t i = 1; i < reports.size(); ++i)
        CHECK(std::tie(reports[i - 1].graph6, reports[i - 1].bound_id) <=
              std::tie(reports[i].graph6, reports[i].bound_id));
}

TEST_CASE("graft monotonicity checks") {
    // P_4 with site (1,2) lifts rho_1 from P_4's to the star's sqrt(30)
    const auto checks = check_graft_monotonicity(path_graph(4));
    REQUIRE(checks.size() == 1);
    CHECK(checks[0].rho_before == Approx(spectral_radius(path_graph(4))).epsilon(1e-12));
    CHECK(checks[0].rho_after == Approx(std::sqrt(30.0)).epsilon(1e-10));

    // stars have no qualifying site: every edge has a pendant endpoint
    CHECK(check_graft_monotonicity(star_graph(5)).empty());

    // C_4: every edge qualifies, both orientations coincide by symmetry
    const auto c4 = check_graft_monotonicity(cycle_graph(4));
    CHECK(c4.size() == 4);
    for (const auto& c : c4) CHECK(c.rho_after > c.rho_before + 1e-9);

    // non-tree connected graphs qualify as well
    for (const Graph& g : {cycle_graph(5), cycle_graph(6), complete_bipartite_graph(3, 3),
                           complete_bipartite_graph(2, 3)}) {
        const auto checks = check_graft_monotonicity(g);
        CHECK_FALSE(checks.empty());
        for (const auto& c : checks) CHECK(c.rho_after > c.rho_before + 1e-9);
    }

    CHECK_THROWS_AS(check_graft_monotonicity(k2_union_graph(4)), DisconnectedError);
}

TEST_CASE("edge deletion strictly lowers the energy of bipartite graphs") {
    const auto k2 = check_edge_deletion_energy(complete_graph(2));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].energy_before == Approx(2.0 * std::sqrt(2.0)));
    CHECK(k2[0].energy_after == 0.0);

    const auto p4 = check_edge_deletion_energy(path_graph(4));
    REQUIRE(p4.size() == 3);
    for (const auto& c : p4) {
        if (c.u == 1 && c.v == 2) // middle edge leaves two disjoint edges
            CHECK(c.energy_after == Approx(4.0 * std::sqrt(2.0)).epsilon(1e-10));
        CHECK(c.energy_before > c.energy_after + 1e-9);
    }

    CHECK_THROWS_AS(check_edge_deletion_energy(cycle_graph(5)), NotBipartiteError);

    for (const Graph& t : all_trees(8)) CHECK(check_edge_deletion_energy(t).size() == 7);
}

TEST_CASE("edge deletion can raise the energy: K_{2,4}") {
    // deleting any edge of K_{2,4} increases the Sombor energy, because
    // every remaining weight is recomputed from the new degrees; the
    // strict-decrease check must flag it
    const Graph k24 = complete_bipartite_graph(2, 4);
    const double before = sombor_energy(k24);
    CHECK(before == Approx(2.0 * std::sqrt(160.0)).epsilon(1e-12));
    const double after = sombor_energy(delete_edge(k24, 0, 2));
    CHECK(after > before + 0.5);
    CHECK_THROWS_AS(check_edge_deletion_energy(k24), Error);
}

TEST_CASE("adjacency lemmas hold on the connected corpus") {
    corpus::for_each_connected_labeled_graph(5, [&](const Graph& g) {
        const int n = g.vertex_count();
        const double lambda1 = spectral_radius(eigenvalues(adjacency_matrix(g)));
        const double z1 = first_zagreb(g);
        const auto prof = degree_profile(g);
        const double tol = 1e-9 * std::max(1.0, lambda1);

        // sqrt(Z1/n) <= lambda_1 <= Delta, equalities at (semi)regular /
        // regular graphs
        CHECK(lambda1 >= std::sqrt(z1 / n) - tol);
        CHECK(lambda1 <= prof.max_deg + tol);
        const bool left_eq = std::abs(lambda1 - std::sqrt(z1 / n)) <= 1e-7 * std::max(1.0, lambda1);
        const bool semireg = classify_equality_family(g, "regular") ||
                             classify_equality_family(g, "semiregular_bipartite");
        CHECK(left_eq == semireg);
        const bool right_eq = std::abs(lambda1 - prof.max_deg) <= 1e-7 * std::max(1.0, lambda1);
        CHECK(right_eq == classify_equality_family(g, "regular"));

        // 2m/n <= lambda_1 <= sqrt(2m - n + 1), right equality at stars and
        // complete graphs
        const double m = g.edge_count();
        CHECK(lambda1 >= 2.0 * m / n - tol);
        CHECK(lambda1 <= std::sqrt(2.0 * m - n + 1.0) + tol);
        const bool le = std::abs(lambda1 - 2.0 * m / n) <= 1e-7 * std::max(1.0, lambda1);
        CHECK(le == classify_equality_family(g, "regular"));
        const bool re =
            std::abs(lambda1 - std::sqrt(2.0 * m - n + 1.0)) <= 1e-7 * std::max(1.0, lambda1);
        CHECK(re == (classify_equality_family(g, "star") ||
                     classify_equality_family(g, "complete")));
    });
}

TEST_CASE("violation accounting distinguishes holds from equality") {
    // with an absurd tolerance factor the exactly-tight rows flip to
    // violations, which exercises the summary counters honestly
    const VerifySummary strict = verify_corpus({complete_graph(4)}, {"T3.2-U"}, nullptr, 1, -1e-3);
    CHECK(strict.violations == 1);
    const VerifySummary normal = verify_corpus({complete_graph(4)}, {"T3.2-U"}, nullptr);
    CHECK(normal.violations == 0);
    CHECK(normal.equalities == 1);
}

TEST_CASE("per-graph evaluation failures are counted, not fatal") {
    // estrada on K_62 trips the overflow guard; the sweep keeps going and
    // still evaluates the second graph
    const VerifySummary s =
        verify_corpus({complete_graph(62), complete_graph(4)}, {"T5.1-U", "T3.2-U"}, nullptr);
    CHECK(s.graphs == 2);
    CHECK(s.errors >= 1);
    CHECK(s.evaluated >= 2);
    CHECK(s.violations == 0);
}

TEST_CASE("degenerate inertia terms of T5.2 / T5.3") {
    // K_{s,t} has p = 1: the (p-1) term drops and the bound still holds
    const BoundReport r = evaluate_bound("T5.2-L", complete_bipartite_graph(2, 3));
    CHECK(r.holds);
    const BoundReport s = evaluate_bound("T5.3-L", complete_bipartite_graph(2, 3));
    CHECK(s.holds);
    // rank 2 bipartite: equality branch E = 2 rho_1
    const BoundReport t = evaluate_bound("T5.3-L", complete_graph(2));
    CHECK(t.holds);
}
