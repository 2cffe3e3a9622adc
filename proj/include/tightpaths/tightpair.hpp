#pragma once

#include <string>
#include <vector>

#include "tightpaths/graph.hpp"

namespace tightpaths {

enum class PairAlgo { Tighten, Stacked, Weights };

/// DFS over the dag keeping (vertex, distance-from-root) on the stack.
/// Vertices are marked visited when popped; duplicate stack entries are
/// skipped at pop time. The mayextend flag suppresses emission whenever
/// some successor extension fits the budget, even an already-visited one.
std::vector<VertexPair> tight_pairs_from_root_stacked(const VertexWeightedDag& g, const VertexId& root,
                                                      double gamma, double tol = 0.0);

/// Same contract; distances are recomputed on the fly from vertex
/// weights, so the stack holds bare vertices.
std::vector<VertexPair> tight_pairs_from_root_weights(const VertexWeightedDag& g, const VertexId& root,
                                                      double gamma, double tol = 0.0);

/// Union over every vertex taken as root, in vertex input order.
std::vector<VertexPair> all_tight_pairs(const VertexWeightedDag& g, double gamma, PairAlgo variant,
                                        double tol = 0.0);

} // namespace tightpaths
