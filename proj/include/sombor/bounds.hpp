#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sombor/graph.hpp"
#include "sombor/invariants.hpp"
#include "sombor/spectra.hpp"

namespace sombor {

enum class BoundTarget { spectral_radius, energy, estrada };
enum class BoundSide { lower, upper };

std::string to_string(BoundTarget t);
std::string to_string(BoundSide s);

/// Per-graph cache for everything the bound evaluators touch. Members are
/// computed on first use; keep one context per thread.
class BoundContext {
public:
    explicit BoundContext(Graph g) : g_(std::move(g)) {}

    const Graph& graph() const { return g_; }
    int n() const { return g_.vertex_count(); }
    int m() const { return g_.edge_count(); }

    const std::string& graph6() const;
    int max_degree() const;
    int min_degree() const;
    const IndexValues& indices() const;
    const Spectrum& sombor_spectrum() const;
    double rho1() const { return spectral_radius(sombor_spectrum()); }
    double sombor_energy() const;
    double estrada_value() const;
    double adjacency_lambda1() const;
    double isi_energy() const;
    double trace_s3() const;
    double trace_s4() const;
    bool connected() const;
    bool bipartite() const;
    bool tree() const;
    bool complete_bipartite() const;

private:
    void compute_traces() const;

    Graph g_;
    mutable std::optional<std::string> graph6_;
    mutable std::optional<DegreeProfile> degrees_;
    mutable std::optional<IndexValues> indices_;
    mutable std::optional<Spectrum> sombor_;
    mutable std::optional<double> energy_;
    mutable std::optional<double> estrada_;
    mutable std::optional<double> lambda1_;
    mutable std::optional<double> isi_energy_;
    mutable std::optional<double> tr3_, tr4_;
    mutable std::optional<bool> connected_, bipartite_, tree_, complete_bipartite_;
};

/// One registered inequality. equality_family is a classifier id,
/// "none_stated" when the source states no characterization, or "never"
/// for strict inequalities whose equality flag must not fire.
struct BoundSpec {
    std::string id;
    BoundTarget target = BoundTarget::spectral_radius;
    BoundSide side = BoundSide::lower;
    std::string equality_family = "none_stated";
    bool family_connected_only = false;
    std::function<bool(BoundContext&)> applicable;
    std::function<double(BoundContext&)> bound_value;
};

struct BoundReport {
    std::string graph6;
    std::string bound_id;
    double target_value = 0.0;
    double bound_value = 0.0;
    /// bound - value for upper bounds, value - bound for lower bounds.
    double slack = 0.0;
    bool holds = false;
    bool equality = false;
    bool equality_family_matches = true;
};

/// Default scale of the equality / violation tolerance:
/// tol = kEqualityTolFactor * max(1, |target value|).
inline constexpr double kEqualityTolFactor = 1e-7;

const std::vector<BoundSpec>& bound_registry();
std::vector<std::string> bound_ids();
const BoundSpec& find_bound(const std::string& id); // UnknownBoundError

bool applicable(const std::string& bound_id, const Graph& g);

BoundReport evaluate_bound(const BoundSpec& spec, BoundContext& ctx,
                           double tol_factor = kEqualityTolFactor);
/// Throws NotApplicableError when the hypotheses fail.
BoundReport evaluate_bound(const std::string& bound_id, const Graph& g,
                           double tol_factor = kEqualityTolFactor);

/// Structural predicates backing the equality characterizations:
/// regular, semiregular_bipartite, complete, complete_bipartite, star,
/// balanced_complete_bipartite, empty_or_k2_union, empty, never.
/// Throws UnknownFamilyError.
bool classify_equality_family(const Graph& g, const std::string& family_id);

struct VerifySummary {
    long graphs = 0;
    long evaluated = 0;
    long violations = 0;
    long equalities = 0;
    long family_mismatches = 0;
    long errors = 0;

    VerifySummary& operator+=(const VerifySummary& o);
};

/// Evaluates every applicable (graph, bound) pair. Reports reach the sink
/// grouped per graph in corpus order (bounds in registry order inside a
/// group); pass a null sink for summary-only sweeps. Per-graph numerical
/// failures are counted in errors without aborting.
VerifySummary verify_corpus(const std::vector<Graph>& corpus, const std::vector<std::string>& ids,
                            const std::function<void(const BoundReport&)>& sink,
                            unsigned threads = 1, double tol_factor = kEqualityTolFactor);

/// Convenience form returning the merged reports sorted by
/// (graph6, bound_id).
std::pair<std::vector<BoundReport>, VerifySummary> verify_corpus_collect(
    const std::vector<Graph>& corpus, const std::vector<std::string>& ids, unsigned threads = 1,
    double tol_factor = kEqualityTolFactor);

// ---- structural strict-monotonicity checks ----

struct GraftCheck {
    GraftSite site;
    double rho_before = 0.0;
    double rho_after = 0.0;
};

/// Applies the graft transformation at every qualifying site of a
/// connected graph, orienting each edge so the endpoint with the larger
/// Perron component plays u. The spectral radius must strictly increase
/// by more than 1e-9 at each site (Error otherwise).
std::vector<GraftCheck> check_graft_monotonicity(const Graph& g);

struct EdgeDeletionCheck {
    int u = 0;
    int v = 0;
    double energy_before = 0.0;
    double energy_after = 0.0;
};

/// Deletes each edge of a bipartite graph in turn; the Sombor energy must
/// strictly decrease by more than 1e-9 every time (Error otherwise).
std::vector<EdgeDeletionCheck> check_edge_deletion_energy(const Graph& g);

} // namespace sombor
