#include "sombor/extremal.hpp"

#include <algorithm>
#include <cmath>

#include "sombor/graph6.hpp"
#include "sombor/invariants.hpp"
#include "sombor/parallel.hpp"
#include "sombor/spectra.hpp"
#include "sombor/trees.hpp"

namespace sombor {

namespace {
constexpr double kTieTolFactor = 1e-9;
}

std::string to_string(ExtremalInvariant i) {
    switch (i) {
        case ExtremalInvariant::spectral_radius: return "spectral_radius";
        case ExtremalInvariant::energy: return "energy";
        case ExtremalInvariant::estrada: return "estrada";
        case ExtremalInvariant::sombor_index: return "sombor_index";
    }
    return "?";
}

std::string to_string(Objective o) { return o == Objective::min ? "min" : "max"; }

std::optional<ExtremalInvariant> invariant_from_name(const std::string& name) {
    if (name == "spectral_radius" || name == "rho1") return ExtremalInvariant::spectral_radius;
    if (name == "energy") return ExtremalInvariant::energy;
    if (name == "estrada") return ExtremalInvariant::estrada;
    if (name == "sombor_index" || name == "sombor") return ExtremalInvariant::sombor_index;
    return std::nullopt;
}

double evaluate_invariant(const Graph& g, ExtremalInvariant invariant) {
    switch (invariant) {
        case ExtremalInvariant::spectral_radius: return spectral_radius(g);
        case ExtremalInvariant::energy: return sombor_energy(g);
        case ExtremalInvariant::estrada: return estrada_index(g);
        case ExtremalInvariant::sombor_index: return sombor_index(g);
    }
    throw Error("bad invariant");
}

ExtremalResult sweep(const std::vector<Graph>& corpus, ExtremalInvariant invariant,
                     Objective objective, std::string corpus_desc, unsigned threads) {
    if (corpus.empty()) throw EmptyCorpusError("extremal sweep over an empty corpus");
    ExtremalResult res;
    res.invariant = invariant;
    res.objective = objective;
    res.corpus = std::move(corpus_desc);
    res.total = static_cast<long>(corpus.size());

    struct Item {
        std::string graph6;
        double value = 0.0;
        bool ok = false;
    };
    const double sign = objective == Objective::max ? 1.0 : -1.0;
    std::vector<Witness> candidates; // within a loose margin of the running best
    double best = 0.0;
    bool have_best = false;
    parallel_map_ordered<Item>(
        corpus.size(), threads,
        [&](std::size_t i) {
            Item item;
            try {
                item.value = evaluate_invariant(corpus[i], invariant);
                item.graph6 = write_graph6(corpus[i]);
                item.ok = true;
            } catch (const Error&) {
                item.ok = false;
            }
            return item;
        },
        [&](std::size_t, Item&& item) {
            if (!item.ok) {
                ++res.skipped;
                return;
            }
            const double keyed = sign * item.value;
            if (!have_best || keyed > best) {
                best = keyed;
                have_best = true;
            }
            // keep everything close to the running best; the exact tie set
            // is filtered once the optimum is final
            const double loose = 1e-6 * std::max(1.0, std::abs(best));
            if (keyed >= best - loose) candidates.push_back({std::move(item.graph6), item.value});
        });
    if (!have_best) throw EmptyCorpusError("every graph in the corpus was skipped");

    res.optimum = sign * best;
    const double tol = kTieTolFactor * std::max(1.0, std::abs(res.optimum));
    for (auto& w : candidates)
        if (sign * w.value >= best - tol) res.witnesses.push_back(std::move(w));
    std::sort(res.witnesses.begin(), res.witnesses.end(),
              [](const Witness& a, const Witness& b) { return a.graph6 < b.graph6; });
    return res;
}

std::vector<ExtremalResult> tree_sweep(int n_lo, int n_hi, ExtremalInvariant invariant,
                                       Objective objective, unsigned threads) {
    if (n_lo < 3 || n_hi > 12 || n_lo > n_hi)
        throw SizeUnsupportedError("tree sweep supports 3 <= n <= 12");
    std::vector<ExtremalResult> out;
    for (int n = n_lo; n <= n_hi; ++n)
        out.push_back(sweep(all_trees(n), invariant, objective,
                            "trees n=" + std::to_string(n), threads));
    return out;
}

} // namespace sombor
