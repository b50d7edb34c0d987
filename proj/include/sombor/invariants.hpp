#pragma once

#include "sombor/graph.hpp"

namespace sombor {

/// Degree-based indices used by the bound evaluators. first_zagreb and
/// forgotten are integer-valued and exact in double precision.
struct IndexValues {
    double sombor = 0.0;
    double first_zagreb = 0.0;
    double forgotten = 0.0;
    double isi = 0.0;
};

IndexValues compute_indices(const Graph& g);

/// SO(G) = sum over edges of sqrt(d_u^2 + d_v^2).
double sombor_index(const Graph& g);

/// Z1 = sum of d_i^2. Cross-checked against the edge form sum(d_u + d_v).
double first_zagreb(const Graph& g);

/// F = sum of d_i^3. Cross-checked against the edge form sum(d_u^2 + d_v^2).
double forgotten(const Graph& g);

/// ISI(G) = sum over edges of d_u d_v / (d_u + d_v).
double isi_index(const Graph& g);

/// SO-value of an edge: d_u^2 + d_v^2 (the squared Sombor weight).
/// Throws NoSuchEdgeError.
double edge_so_value(const Graph& g, int u, int v);

} // namespace sombor
