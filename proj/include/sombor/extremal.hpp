#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

enum class ExtremalInvariant { spectral_radius, energy, estrada, sombor_index };
enum class Objective { min, max };

std::string to_string(ExtremalInvariant i);
std::string to_string(Objective o);
std::optional<ExtremalInvariant> invariant_from_name(const std::string& name);

struct Witness {
    std::string graph6;
    double value = 0.0;
};

/// Extremizers over a corpus. All witnesses lie within
/// 1e-9 * max(1, |optimum|) of the optimum; ties are reported, not broken,
/// and sorted by graph6 string so runs are deterministic.
struct ExtremalResult {
    ExtremalInvariant invariant = ExtremalInvariant::spectral_radius;
    Objective objective = Objective::min;
    std::string corpus;
    double optimum = 0.0;
    std::vector<Witness> witnesses;
    long total = 0;
    long skipped = 0;
};

double evaluate_invariant(const Graph& g, ExtremalInvariant invariant);

/// Throws EmptyCorpusError; graphs whose evaluation fails numerically are
/// counted in skipped and the sweep continues.
ExtremalResult sweep(const std::vector<Graph>& corpus, ExtremalInvariant invariant,
                     Objective objective, std::string corpus_desc, unsigned threads = 1);

/// One result per n in [n_lo, n_hi] over the free trees of that order;
/// each n must be in 3..12 (SizeUnsupportedError).
std::vector<ExtremalResult> tree_sweep(int n_lo, int n_hi, ExtremalInvariant invariant,
                                       Objective objective, unsigned threads = 1);

} // namespace sombor
