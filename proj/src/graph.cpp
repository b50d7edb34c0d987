#include "sombor/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace sombor {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw BadParamsError("vertex count must be non-negative");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRangeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") outside 0.." + std::to_string(n - 1));
        if (u == v) throw LoopEdgeError("loop at vertex " + std::to_string(u));
        adj[u].push_back(v);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = adj[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw DuplicateEdgeError("duplicate edge at vertex " + std::to_string(v));
    }
    // mirror the direction we stored each pair in
    std::vector<std::vector<int>> sym(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (int v : adj[u]) {
            if (std::binary_search(adj[v].begin(), adj[v].end(), u))
                throw DuplicateEdgeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                         ") listed twice");
            sym[u].push_back(v);
            sym[v].push_back(u);
        }
    return graph_from_sorted_adjacency([&] {
        for (auto& nb : sym) std::sort(nb.begin(), nb.end());
        return std::move(sym);
    }());
}

Graph graph_from_sorted_adjacency(std::vector<std::vector<int>> adj) {
    Graph g;
    g.n_ = static_cast<int>(adj.size());
    std::size_t total = 0;
    for (const auto& nb : adj) total += nb.size();
    g.m_ = static_cast<int>(total / 2);
    g.adj_ = std::move(adj);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) p.degrees[static_cast<std::size_t>(v)] = g.degree(v);
    if (!p.degrees.empty()) {
        auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
        p.min_deg = *lo;
        p.max_deg = *hi;
    }
    return p;
}

namespace {

// BFS from vertex 0; returns number of reached vertices.
int bfs_reach(const Graph& g, std::vector<int>& dist, int start) {
    std::deque<int> queue{start};
    dist.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    dist[static_cast<std::size_t>(start)] = 0;
    int seen = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
                ++seen;
            }
    }
    return seen;
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    std::vector<int> dist;
    return bfs_reach(g, dist, 0) == g.vertex_count();
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw < 0) {
                    cw = 1 - color[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (cw == color[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

int diameter(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("diameter requires a connected graph");
    int diam = 0;
    std::vector<int> dist;
    for (int s = 0; s < g.vertex_count(); ++s) {
        bfs_reach(g, dist, s);
        diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
    }
    return diam;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw NoSuchEdgeError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (int x = 0; x < g.vertex_count(); ++x) {
        for (int w : g.neighbors(x)) {
            if ((x == u && w == v) || (x == v && w == u)) continue;
            adj[static_cast<std::size_t>(x)].push_back(w);
        }
    }
    return graph_from_sorted_adjacency(std::move(adj));
}

Graph complete_graph(int n) {
    if (n < 1) throw BadParamsError("complete(n) needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edge_list(n, e);
}

Graph complete_bipartite_graph(int s, int t) {
    if (s < 1 || t < 1) throw BadParamsError("complete_bipartite(s,t) needs s,t >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) e.emplace_back(u, s + v);
    return Graph::from_edge_list(s + t, e);
}

Graph path_graph(int n) {
    if (n < 1) throw BadParamsError("path(n) needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw BadParamsError("cycle(n) needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph star_graph(int n) { return complete_bipartite_graph(1, n - 1); }

Graph empty_graph(int n) {
    if (n < 1) throw BadParamsError("empty(n) needs n >= 1");
    return Graph::from_edge_list(n, {});
}

Graph k2_union_graph(int n) {
    if (n < 2 || n % 2 != 0) throw BadParamsError("k2_union(n) needs even n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; v += 2) e.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, e);
}

Graph family(FamilyKind kind, const std::vector<int>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw BadParamsError("family expects " + std::to_string(k) + " parameter(s)");
    };
    switch (kind) {
        case FamilyKind::complete: want(1); return complete_graph(params[0]);
        case FamilyKind::complete_bipartite: want(2); return complete_bipartite_graph(params[0], params[1]);
        case FamilyKind::path: want(1); return path_graph(params[0]);
        case FamilyKind::cycle: want(1); return cycle_graph(params[0]);
        case FamilyKind::star:
            want(1);
            if (params[0] < 2) throw BadParamsError("star(n) needs n >= 2");
            return star_graph(params[0]);
        case FamilyKind::empty: want(1); return empty_graph(params[0]);
        case FamilyKind::k2_union: want(1); return k2_union_graph(params[0]);
    }
    throw BadParamsError("unknown family kind");
}

std::optional<FamilyKind> family_kind_from_name(const std::string& name) {
    if (name == "complete") return FamilyKind::complete;
    if (name == "complete_bipartite") return FamilyKind::complete_bipartite;
    if (name == "path") return FamilyKind::path;
    if (name == "cycle") return FamilyKind::cycle;
    if (name == "star") return FamilyKind::star;
    if (name == "empty") return FamilyKind::empty;
    if (name == "k2_union") return FamilyKind::k2_union;
    return std::nullopt;
}

void validate_graft_site(const Graph& g, GraftSite site) {
    const auto [u, v] = site;
    if (!g.has_edge(u, v))
        throw SiteInvalidError("graft site: uv is not an edge");
    if (g.degree(u) < 2) throw SiteInvalidError("graft site: deg(u) < 2");
    if (g.degree(v) < 2) throw SiteInvalidError("graft site: deg(v) < 2");
    const auto& nu = g.neighbors(u);
    for (int w : g.neighbors(v))
        if (std::binary_search(nu.begin(), nu.end(), w))
            throw SiteInvalidError("graft site: u and v share neighbor " + std::to_string(w));
}

Graph graft_transform(const Graph& g, GraftSite site) {
    validate_graft_site(g, site);
    const auto [u, v] = site;
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<std::size_t>(g.edge_count()));
    for (auto [a, b] : g.edges()) {
        // move every vw (w != u) to uw; N(u) and N(v) are disjoint, so no
        // duplicates can appear
        if (a == v && b != u) a = u;
        else if (b == v && a != u) b = u;
        e.emplace_back(a, b);
    }
    return Graph::from_edge_list(g.vertex_count(), e);
}

} // namespace sombor
