#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sombor/errors.hpp"

namespace sombor {

/// Immutable simple undirected graph on vertices 0..n-1 with sorted
/// neighbor lists. All mutation-style operations return fresh values,
/// so Graph instances can be shared freely across threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an explicit edge list.
    /// Throws VertexOutOfRangeError, LoopEdgeError or DuplicateEdgeError.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    /// All edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;

    friend Graph graph_from_sorted_adjacency(std::vector<std::vector<int>> adj);
};

/// Internal fast path: adjacency lists must already be sorted, symmetric
/// and loop/duplicate free. Callers inside the library only.
Graph graph_from_sorted_adjacency(std::vector<std::vector<int>> adj);

struct DegreeProfile {
    std::vector<int> degrees;
    int max_deg = 0;
    int min_deg = 0;
};

DegreeProfile degree_profile(const Graph& g);

bool is_connected(const Graph& g);

/// Two-coloring of a bipartite graph (color per vertex, 0/1), or nullopt.
std::optional<std::vector<int>> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// BFS-exact diameter; throws DisconnectedError on disconnected input.
int diameter(const Graph& g);

bool is_tree(const Graph& g);

/// Returns g without the edge uv; throws NoSuchEdgeError.
Graph delete_edge(const Graph& g, int u, int v);

// ---- standard families ----

enum class FamilyKind { complete, complete_bipartite, path, cycle, star, empty, k2_union };

/// Named family constructor; params as in the per-family helpers below.
/// Throws BadParamsError.
Graph family(FamilyKind kind, const std::vector<int>& params);

std::optional<FamilyKind> family_kind_from_name(const std::string& name);

Graph complete_graph(int n);
Graph complete_bipartite_graph(int s, int t);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n); // K_{1,n-1}, n >= 2
Graph empty_graph(int n);
Graph k2_union_graph(int n); // (n/2) disjoint edges, n even

// ---- grafting transformation ----

/// An edge uv along which neighbors of v get rewired onto u.
struct GraftSite {
    int u = 0;
    int v = 0;
};

/// Checks the site preconditions: uv in E, deg(u) >= 2, deg(v) >= 2 and
/// N(u) and N(v) disjoint. Throws SiteInvalidError naming the failure.
void validate_graft_site(const Graph& g, GraftSite site);

/// Rewires every neighbor w != u of v to u, leaving v pendant on u.
/// Edge and vertex counts are preserved.
Graph graft_transform(const Graph& g, GraftSite site);

} // namespace sombor
