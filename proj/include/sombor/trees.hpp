#pragma once

#include <functional>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// Streams exactly one representative per isomorphism class of free trees
/// on n vertices (1 <= n <= 12), using the Wright-Richmond-Odlyzko-McKay
/// level-sequence successor: canonical rooted level sequences are advanced
/// in place, so no isomorphism rejection happens at runtime.
/// Throws SizeUnsupportedError outside the supported range.
void enumerate_trees(int n, const std::function<void(const Graph&)>& emit);

/// Convenience: materializes the whole stream.
std::vector<Graph> all_trees(int n);

/// Count of free-tree isomorphism classes on n vertices.
long count_trees(int n);

} // namespace sombor
