#include <doctest.h>

#include <cmath>

#include "sombor/invariants.hpp"
#include "sombor/trees.hpp"
#include "support/corpus.hpp"

using namespace sombor;
using doctest::Approx;

TEST_CASE("sombor index closed cases") {
    CHECK(sombor_index(complete_graph(2)) == Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sombor_index(path_graph(4)) ==
          Approx(2.0 * std::sqrt(5.0) + std::sqrt(8.0)).epsilon(1e-12));
    CHECK(sombor_index(empty_graph(7)) == 0.0);
}

TEST_CASE("zagreb and forgotten indices") {
    CHECK(first_zagreb(path_graph(4)) == 10.0);
    CHECK(forgotten(path_graph(4)) == 18.0);
    CHECK(forgotten(complete_graph(4)) == 108.0);
    CHECK(forgotten(complete_bipartite_graph(2, 3)) == 78.0);
}

TEST_CASE("isi index") {
    CHECK(isi_index(complete_graph(2)) == Approx(0.5).epsilon(1e-15));
    CHECK(isi_index(path_graph(4)) == Approx(7.0 / 3.0).epsilon(1e-14));
    // r-regular graph with m edges: m * r / 2
    const Graph c6 = cycle_graph(6);
    CHECK(isi_index(c6) == Approx(6.0 * 2.0 / 2.0).epsilon(1e-14));
    const Graph k5 = complete_graph(5);
    CHECK(isi_index(k5) == Approx(10.0 * 4.0 / 2.0).epsilon(1e-14));
}

TEST_CASE("edge SO-values") {
    CHECK(edge_so_value(complete_graph(2), 0, 1) == 2.0);
    CHECK(edge_so_value(path_graph(4), 1, 2) == 8.0);
    const Graph star = star_graph(4);
    for (auto [u, v] : star.edges()) CHECK(edge_so_value(star, u, v) == 10.0);
    CHECK_THROWS_AS(edge_so_value(path_graph(4), 0, 3), NoSuchEdgeError);
}

TEST_CASE("edge SO-values sum to the forgotten index") {
    for (int n = 2; n <= 8; ++n) {
        for (const Graph& t : all_trees(n)) {
            double sum = 0.0;
            for (auto [u, v] : t.edges()) sum += edge_so_value(t, u, v);
            CHECK(sum == forgotten(t));
        }
    }
    corpus::for_each_labeled_graph(5, [&](const Graph& g) {
        double sum = 0.0;
        for (auto [u, v] : g.edges()) sum += edge_so_value(g, u, v);
        CHECK(sum == forgotten(g));
    });
}

TEST_CASE("F strictly decreases under edge deletion") {
    corpus::for_each_labeled_graph(5, [&](const Graph& g) {
        const double f = forgotten(g);
        for (auto [u, v] : g.edges()) CHECK(forgotten(delete_edge(g, u, v)) < f);
    });
}

TEST_CASE("compute_indices bundles the four values") {
    const IndexValues idx = compute_indices(path_graph(4));
    CHECK(idx.sombor == Approx(sombor_index(path_graph(4))));
    CHECK(idx.first_zagreb == 10.0);
    CHECK(idx.forgotten == 18.0);
    CHECK(idx.isi == Approx(7.0 / 3.0));
}
