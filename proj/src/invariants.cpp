#include "sombor/invariants.hpp"

#include <cmath>

namespace sombor {

namespace {

double zagreb_vertex_form(const Graph& g, int power) {
    double acc = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const double d = g.degree(v);
        acc += power == 2 ? d * d : d * d * d;
    }
    return acc;
}

double zagreb_edge_form(const Graph& g, int power) {
    double acc = 0.0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            const double du = g.degree(u), dv = g.degree(v);
            acc += power == 2 ? du + dv : du * du + dv * dv;
        }
    return acc;
}

double zagreb_checked(const Graph& g, int power) {
    const double vertex = zagreb_vertex_form(g, power);
    const double edge = zagreb_edge_form(g, power);
    // both are exact integer sums; any difference is a bug
    if (vertex != edge)
        throw Error("vertex/edge sum mismatch for degree power " + std::to_string(power));
    return vertex;
}

} // namespace

double sombor_index(const Graph& g) {
    double acc = 0.0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            const double du = g.degree(u), dv = g.degree(v);
            acc += std::sqrt(du * du + dv * dv);
        }
    return acc;
}

double first_zagreb(const Graph& g) { return zagreb_checked(g, 2); }

double forgotten(const Graph& g) { return zagreb_checked(g, 3); }

double isi_index(const Graph& g) {
    double acc = 0.0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            const double du = g.degree(u), dv = g.degree(v);
            acc += du * dv / (du + dv);
        }
    return acc;
}

double edge_so_value(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw NoSuchEdgeError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    const double du = g.degree(u), dv = g.degree(v);
    return du * du + dv * dv;
}

IndexValues compute_indices(const Graph& g) {
    return IndexValues{sombor_index(g), first_zagreb(g), forgotten(g), isi_index(g)};
}

} // namespace sombor
