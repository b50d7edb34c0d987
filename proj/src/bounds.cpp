#include "sombor/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "sombor/graph6.hpp"
#include "sombor/parallel.hpp"

namespace sombor {

namespace {
constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kStrictMargin = 1e-9;
} // namespace

std::string to_string(BoundTarget t) {
    switch (t) {
        case BoundTarget::spectral_radius: return "spectral_radius";
        case BoundTarget::energy: return "energy";
        case BoundTarget::estrada: return "estrada";
    }
    return "?";
}

std::string to_string(BoundSide s) { return s == BoundSide::lower ? "lower" : "upper"; }

// ---- BoundContext ----

const std::string& BoundContext::graph6() const {
    if (!graph6_) graph6_ = write_graph6(g_);
    return *graph6_;
}
int BoundContext::max_degree() const {
    if (!degrees_) degrees_ = degree_profile(g_);
    return degrees_->max_deg;
}
int BoundContext::min_degree() const {
    if (!degrees_) degrees_ = degree_profile(g_);
    return degrees_->min_deg;
}
const IndexValues& BoundContext::indices() const {
    if (!indices_) indices_ = compute_indices(g_);
    return *indices_;
}
const Spectrum& BoundContext::sombor_spectrum() const {
    if (!sombor_) sombor_ = eigenvalues(sombor_matrix(g_));
    return *sombor_;
}
double BoundContext::sombor_energy() const {
    if (!energy_) energy_ = energy(sombor_spectrum());
    return *energy_;
}
double BoundContext::estrada_value() const {
    if (!estrada_) estrada_ = estrada(sombor_spectrum());
    return *estrada_;
}
double BoundContext::adjacency_lambda1() const {
    if (!lambda1_) lambda1_ = spectral_radius(eigenvalues(adjacency_matrix(g_)));
    return *lambda1_;
}
double BoundContext::isi_energy() const {
    if (!isi_energy_) isi_energy_ = energy(eigenvalues(isi_matrix(g_)));
    return *isi_energy_;
}
void BoundContext::compute_traces() const {
    // one S^2 serves both traces: tr(S^3) = <S^2, S>, tr(S^4) = ||S^2||_F^2
    const SymmetricMatrix s = sombor_matrix(g_);
    const int n = s.size();
    SymmetricMatrix s2(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double acc = 0.0;
            for (int l = 0; l < n; ++l) acc += s(i, l) * s(l, j);
            s2.set(i, j, acc);
        }
    double t3 = 0.0, t4 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t3 += s2(i, j) * s(j, i);
            t4 += s2(i, j) * s2(i, j);
        }
    tr3_ = t3;
    tr4_ = t4;
}
double BoundContext::trace_s3() const {
    if (!tr3_) compute_traces();
    return *tr3_;
}
double BoundContext::trace_s4() const {
    if (!tr4_) compute_traces();
    return *tr4_;
}
bool BoundContext::connected() const {
    if (!connected_) connected_ = is_connected(g_);
    return *connected_;
}
bool BoundContext::bipartite() const {
    if (!bipartite_) bipartite_ = is_bipartite(g_);
    return *bipartite_;
}
bool BoundContext::tree() const {
    if (!tree_) tree_ = is_tree(g_);
    return *tree_;
}
bool BoundContext::complete_bipartite() const {
    if (!complete_bipartite_)
        complete_bipartite_ = classify_equality_family(g_, "complete_bipartite");
    return *complete_bipartite_;
}

// ---- equality family classifiers ----

bool classify_equality_family(const Graph& g, const std::string& family_id) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    auto regular = [&] {
        for (int v = 1; v < n; ++v)
            if (g.degree(v) != g.degree(0)) return false;
        return true;
    };
    auto part_sizes_and_semiregular = [&]() -> std::optional<std::pair<std::pair<int, int>, bool>> {
        if (!is_connected(g)) return std::nullopt;
        const auto color = bipartition(g);
        if (!color) return std::nullopt;
        int sizes[2] = {0, 0};
        int deg[2] = {-1, -1};
        bool semi = true;
        for (int v = 0; v < n; ++v) {
            const int c = (*color)[static_cast<std::size_t>(v)];
            ++sizes[c];
            if (deg[c] < 0) deg[c] = g.degree(v);
            else if (deg[c] != g.degree(v)) semi = false;
        }
        return std::make_pair(std::make_pair(sizes[0], sizes[1]), semi);
    };

    if (family_id == "regular") return regular();
    if (family_id == "complete") return m == n * (n - 1) / 2;
    if (family_id == "empty") return m == 0;
    if (family_id == "never") return false;
    if (family_id == "empty_or_k2_union") {
        if (m == 0) return true;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) != 1) return false;
        return n >= 2;
    }
    if (family_id == "star") {
        if (n < 2 || m != n - 1) return false;
        return degree_profile(g).max_deg == n - 1;
    }
    if (family_id == "semiregular_bipartite") {
        if (n < 2) return false;
        const auto p = part_sizes_and_semiregular();
        return p && p->second && p->first.first > 0 && p->first.second > 0;
    }
    if (family_id == "complete_bipartite" || family_id == "balanced_complete_bipartite") {
        if (n < 2) return false;
        const auto p = part_sizes_and_semiregular();
        if (!p) return false;
        const auto [s, t] = p->first;
        if (s < 1 || t < 1 || m != s * t) return false;
        if (family_id == "balanced_complete_bipartite") return std::abs(s - t) <= 1;
        return true;
    }
    throw UnknownFamilyError("unknown equality family: " + family_id);
}

// ---- registry ----

namespace {

std::vector<BoundSpec> make_registry() {
    std::vector<BoundSpec> reg;
    auto any = [](BoundContext&) { return true; };
    auto conn = [](BoundContext& c) { return c.connected(); };
    auto add = [&](std::string id, BoundTarget target, BoundSide side, std::string family,
                   bool family_connected_only, std::function<bool(BoundContext&)> app,
                   std::function<double(BoundContext&)> value) {
        reg.push_back({std::move(id), target, side, std::move(family), family_connected_only,
                       std::move(app), std::move(value)});
    };
    using T = BoundTarget;
    using S = BoundSide;

    // spectral radius vs adjacency spectral radius
    add("T3.1-L", T::spectral_radius, S::lower, "regular", false, any,
        [](BoundContext& c) { return kSqrt2 * c.min_degree() * c.adjacency_lambda1(); });
    add("T3.1-U", T::spectral_radius, S::upper, "regular", false, any,
        [](BoundContext& c) { return kSqrt2 * c.max_degree() * c.adjacency_lambda1(); });

    add("C3.1-L", T::spectral_radius, S::lower, "regular", false, conn, [](BoundContext& c) {
        return c.min_degree() * std::sqrt(2.0 * c.indices().first_zagreb / c.n());
    });
    add("C3.1-U", T::spectral_radius, S::upper, "regular", false, conn, [](BoundContext& c) {
        const double d = c.max_degree();
        return kSqrt2 * d * d;
    });

    add("C3.2-L", T::spectral_radius, S::lower, "regular", false, conn, [](BoundContext& c) {
        return 2.0 * kSqrt2 * c.m() * c.min_degree() / c.n();
    });
    add("C3.2-U", T::spectral_radius, S::upper, "complete", false, conn, [](BoundContext& c) {
        return c.max_degree() * std::sqrt(4.0 * c.m() - 2.0 * c.n() + 2.0);
    });

    add("T3.2-L", T::spectral_radius, S::lower, "empty_or_k2_union", false, any,
        [](BoundContext& c) { return std::sqrt(2.0 * c.indices().forgotten / c.n()); });
    // the right-hand equality characterization is stated for connected
    // graphs only
    add("T3.2-U", T::spectral_radius, S::upper, "complete", true, any, [](BoundContext& c) {
        return std::sqrt(2.0 * (c.n() - 1) * c.indices().forgotten / c.n());
    });

    add("C3.3-U", T::spectral_radius, S::upper, "star", false,
        [](BoundContext& c) { return c.tree() && c.n() >= 2; },
        [](BoundContext& c) {
            const double n = c.n();
            return std::sqrt((n - 1.0) * (n * n - 2.0 * n + 2.0));
        });

    // energy vs determinant (Kober)
    add("T4.1-L", T::energy, S::lower, "none_stated", false, any, [](BoundContext& c) {
        const double d = abs_determinant_power(c.sombor_spectrum(), 2.0 / c.n());
        return std::sqrt(2.0 * c.indices().forgotten + c.n() * (c.n() - 1.0) * d);
    });
    add("T4.1-U", T::energy, S::upper, "none_stated", false, any, [](BoundContext& c) {
        const double d = abs_determinant_power(c.sombor_spectrum(), 2.0 / c.n());
        return std::sqrt(2.0 * (c.n() - 1.0) * c.indices().forgotten + c.n() * d);
    });

    add("T4.2-L", T::energy, S::lower, "complete_bipartite", true,
        [](BoundContext& c) { return c.n() >= 3; },
        [](BoundContext& c) { return 2.0 * std::sqrt(c.indices().forgotten); });
    add("T4.2-U", T::energy, S::upper, "empty_or_k2_union", false,
        [](BoundContext& c) { return c.n() >= 3; },
        [](BoundContext& c) { return std::sqrt(2.0 * c.n() * c.indices().forgotten); });

    add("C4.1-L", T::energy, S::lower, "star", false,
        [](BoundContext& c) { return c.complete_bipartite(); },
        [](BoundContext& c) {
            const double n = c.n();
            return 2.0 * std::sqrt((n - 1.0) * (n * n - 2.0 * n + 2.0));
        });
    add("C4.1-U", T::energy, S::upper, "balanced_complete_bipartite", false,
        [](BoundContext& c) { return c.complete_bipartite(); },
        [](BoundContext& c) {
            const double s = (c.n() + 1) / 2, t = c.n() / 2;
            return 2.0 * std::sqrt(s * s * s * t + s * t * t * t);
        });

    add("T4.3-L", T::energy, S::lower, "none_stated", false, any,
        [](BoundContext& c) { return 2.0 * c.rho1(); });
    add("T4.3-U", T::energy, S::upper, "none_stated", false, any, [](BoundContext& c) {
        const double r = c.rho1();
        const double rest = std::max(0.0, 2.0 * c.indices().forgotten - r * r);
        return r + std::sqrt((c.n() - 1.0) * rest);
    });

    add("T4.4-L", T::energy, S::lower, "none_stated", false,
        [](BoundContext& c) { return c.m() >= 1; },
        [](BoundContext& c) {
            const double t2 = 2.0 * c.indices().forgotten;
            return std::sqrt(t2 * t2 * t2 / c.trace_s4());
        });

    add("T4.6-L", T::energy, S::lower, "regular", false,
        [](BoundContext& c) { return c.bipartite(); },
        [](BoundContext& c) { return 2.0 * kSqrt2 * c.isi_energy(); });

    // strict for every tree: the equality flag firing is itself a failure
    add("T4.7-L", T::energy, S::lower, "never", false,
        [](BoundContext& c) { return c.tree() && c.n() >= 3; },
        [](BoundContext& c) { return 2.0 * std::sqrt(2.0 * c.n() - 2.0); });
    add("T4.7-U", T::energy, S::upper, "never", false,
        [](BoundContext& c) { return c.tree() && c.n() >= 3; },
        [](BoundContext& c) {
            return kSqrt2 * c.max_degree() *
                   reference_adjacency_energy(ReferenceFamily::path, c.n());
        });

    // Estrada family
    add("T5.1-U", T::estrada, S::upper, "empty", false, any, [](BoundContext& c) {
        const double F = c.indices().forgotten;
        const double s = std::sqrt(2.0 * F);
        return c.n() - 1.0 + c.trace_s3() / 6.0 + c.trace_s4() / 24.0 + std::exp(s) - s -
               F * s / 3.0 - F * F / 6.0;
    });

    add("T5.2-L", T::estrada, S::lower, "none_stated", false,
        [](BoundContext& c) {
            const Spectrum& s = c.sombor_spectrum();
            return s.positives >= 1 && s.negatives >= 1;
        },
        [](BoundContext& c) {
            const Spectrum& s = c.sombor_spectrum();
            const double E = c.sombor_energy();
            const double r1 = c.rho1();
            const int p = s.positives, n0 = s.zeros, q = s.negatives;
            double mid = 0.0;
            if (p == 1) {
                // sum of positive eigenvalues is E/2, so with one positive
                // eigenvalue E/2 must equal rho_1
                if (E / 2.0 - r1 > kEqualityTolFactor * std::max(1.0, E))
                    throw Error("T5.2: p=1 but E/2 != rho_1");
            } else {
                mid = (p - 1.0) * std::exp((E / 2.0 - r1) / (p - 1.0));
            }
            return std::exp(r1) + n0 + mid + q * std::exp(-E / (2.0 * q));
        });

    add("T5.3-L", T::estrada, S::lower, "none_stated", false,
        [](BoundContext& c) { return c.bipartite() && c.sombor_spectrum().rank() >= 2; },
        [](BoundContext& c) {
            const Spectrum& s = c.sombor_spectrum();
            const double E = c.sombor_energy();
            const double r1 = c.rho1();
            const int r = s.rank(), n0 = s.zeros;
            double tail = 0.0;
            if (r == 2) {
                if (E - 2.0 * r1 > kEqualityTolFactor * std::max(1.0, E))
                    throw Error("T5.3: rank 2 but E != 2 rho_1");
            } else {
                tail = (r - 2.0) * std::cosh((E - 2.0 * r1) / (r - 2.0));
            }
            return n0 + 2.0 * std::cosh(r1) + tail;
        });

    add("T5.4-U", T::estrada, S::upper, "complete_bipartite", false,
        [](BoundContext& c) { return c.connected() && c.bipartite() && c.n() >= 4; },
        [](BoundContext& c) {
            return c.n() - 2.0 + 2.0 * std::cosh(std::sqrt(c.indices().forgotten));
        });

    add("C5.1-L", T::estrada, S::lower, "star", false,
        [](BoundContext& c) { return c.complete_bipartite() && c.n() >= 4; },
        [](BoundContext& c) {
            const double n = c.n();
            return n - 2.0 + 2.0 * std::cosh(std::sqrt((n - 1.0) * (n * n - 2.0 * n + 2.0)));
        });
    add("C5.1-U", T::estrada, S::upper, "balanced_complete_bipartite", false,
        [](BoundContext& c) { return c.complete_bipartite() && c.n() >= 4; },
        [](BoundContext& c) {
            const double s = (c.n() + 1) / 2, t = c.n() / 2;
            return c.n() - 2.0 + 2.0 * std::cosh(std::sqrt(s * s * s * t + s * t * t * t));
        });

    return reg;
}

} // namespace

const std::vector<BoundSpec>& bound_registry() {
    static const std::vector<BoundSpec> registry = make_registry();
    return registry;
}

std::vector<std::string> bound_ids() {
    std::vector<std::string> ids;
    for (const auto& b : bound_registry()) ids.push_back(b.id);
    return ids;
}

const BoundSpec& find_bound(const std::string& id) {
    for (const auto& b : bound_registry())
        if (b.id == id) return b;
    throw UnknownBoundError("unknown bound id: " + id);
}

bool applicable(const std::string& bound_id, const Graph& g) {
    const BoundSpec& spec = find_bound(bound_id);
    BoundContext ctx(g);
    return spec.applicable(ctx);
}

namespace {

double target_value_of(const BoundSpec& spec, BoundContext& ctx) {
    switch (spec.target) {
        case BoundTarget::spectral_radius: return ctx.rho1();
        case BoundTarget::energy: return ctx.sombor_energy();
        case BoundTarget::estrada: return ctx.estrada_value();
    }
    throw Error("bad bound target");
}

} // namespace

BoundReport evaluate_bound(const BoundSpec& spec, BoundContext& ctx, double tol_factor) {
    BoundReport rep;
    rep.graph6 = ctx.graph6();
    rep.bound_id = spec.id;
    rep.target_value = target_value_of(spec, ctx);
    rep.bound_value = spec.bound_value(ctx);
    rep.slack = spec.side == BoundSide::upper ? rep.bound_value - rep.target_value
                                              : rep.target_value - rep.bound_value;
    const double tol = tol_factor * std::max(1.0, std::abs(rep.target_value));
    rep.holds = rep.slack >= -tol;
    rep.equality = std::abs(rep.slack) <= tol;

    if (spec.equality_family == "none_stated") {
        rep.equality_family_matches = true;
    } else if (spec.family_connected_only && !ctx.connected()) {
        rep.equality_family_matches = true;
    } else {
        const bool family = classify_equality_family(ctx.graph(), spec.equality_family);
        rep.equality_family_matches = rep.equality == family;
    }
    return rep;
}

BoundReport evaluate_bound(const std::string& bound_id, const Graph& g, double tol_factor) {
    const BoundSpec& spec = find_bound(bound_id);
    BoundContext ctx(g);
    if (!spec.applicable(ctx))
        throw NotApplicableError("bound " + bound_id + " is not applicable to this graph");
    return evaluate_bound(spec, ctx, tol_factor);
}

VerifySummary& VerifySummary::operator+=(const VerifySummary& o) {
    graphs += o.graphs;
    evaluated += o.evaluated;
    violations += o.violations;
    equalities += o.equalities;
    family_mismatches += o.family_mismatches;
    errors += o.errors;
    return *this;
}

VerifySummary verify_corpus(const std::vector<Graph>& corpus, const std::vector<std::string>& ids,
                            const std::function<void(const BoundReport&)>& sink, unsigned threads,
                            double tol_factor) {
    std::vector<const BoundSpec*> specs;
    specs.reserve(ids.size());
    for (const auto& id : ids) specs.push_back(&find_bound(id));

    struct Item {
        std::vector<BoundReport> reports;
        VerifySummary summary;
    };
    VerifySummary total;
    parallel_map_ordered<Item>(
        corpus.size(), threads,
        [&](std::size_t i) {
            Item item;
            item.summary.graphs = 1;
            BoundContext ctx(corpus[i]);
            for (const BoundSpec* spec : specs) {
                try {
                    if (!spec->applicable(ctx)) continue;
                    BoundReport rep = evaluate_bound(*spec, ctx, tol_factor);
                    ++item.summary.evaluated;
                    if (!rep.holds) ++item.summary.violations;
                    if (rep.equality) ++item.summary.equalities;
                    if (!rep.equality_family_matches) ++item.summary.family_mismatches;
                    if (sink) item.reports.push_back(std::move(rep));
                } catch (const Error&) {
                    ++item.summary.errors;
                }
            }
            return item;
        },
        [&](std::size_t, Item&& item) {
            total += item.summary;
            if (sink)
                for (const auto& rep : item.reports) sink(rep);
        });
    return total;
}

std::pair<std::vector<BoundReport>, VerifySummary> verify_corpus_collect(
    const std::vector<Graph>& corpus, const std::vector<std::string>& ids, unsigned threads,
    double tol_factor) {
    std::vector<BoundReport> reports;
    VerifySummary summary = verify_corpus(
        corpus, ids, [&](const BoundReport& r) { reports.push_back(r); }, threads, tol_factor);
    std::sort(reports.begin(), reports.end(), [](const BoundReport& a, const BoundReport& b) {
        return std::tie(a.graph6, a.bound_id) < std::tie(b.graph6, b.bound_id);
    });
    return {std::move(reports), summary};
}

std::vector<GraftCheck> check_graft_monotonicity(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("graft check requires a connected graph");
    std::vector<GraftCheck> out;
    if (g.edge_count() == 0) return out;
    const PerronVector pv = perron_vector(g);
    const double before = spectral_radius(g);
    for (auto [a, b] : g.edges()) {
        if (g.degree(a) < 2 || g.degree(b) < 2) continue;
        const auto& na = g.neighbors(a);
        bool share = false;
        for (int w : g.neighbors(b))
            if (std::binary_search(na.begin(), na.end(), w)) {
                share = true;
                break;
            }
        if (share) continue;
        // orient so the endpoint with the larger Perron component plays u
        const bool a_is_u = pv.components[static_cast<std::size_t>(a)] >=
                            pv.components[static_cast<std::size_t>(b)];
        const GraftSite site{a_is_u ? a : b, a_is_u ? b : a};
        const double after = spectral_radius(graft_transform(g, site));
        if (after - before <= kStrictMargin)
            throw Error("graft at (" + std::to_string(site.u) + "," + std::to_string(site.v) +
                        ") did not strictly increase the spectral radius");
        out.push_back({site, before, after});
    }
    return out;
}

std::vector<EdgeDeletionCheck> check_edge_deletion_energy(const Graph& g) {
    if (!is_bipartite(g)) throw NotBipartiteError("edge-deletion check requires a bipartite graph");
    std::vector<EdgeDeletionCheck> out;
    if (g.edge_count() == 0) return out;
    const double before = sombor_energy(g);
    for (auto [u, v] : g.edges()) {
        const double after = sombor_energy(delete_edge(g, u, v));
        if (before - after <= kStrictMargin)
            throw Error("deleting edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") did not strictly decrease the energy");
        out.push_back({u, v, before, after});
    }
    return out;
}

} // namespace sombor
