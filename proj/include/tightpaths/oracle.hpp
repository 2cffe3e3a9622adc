#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tightpaths/graph.hpp"
#include "tightpaths/relation.hpp"

namespace tightpaths {

/// Definitional reference implementations. They deliberately share no
/// traversal logic with the algorithm modules: every step rescans the
/// raw edge list.
struct OracleOptions {
    double tol = 0.0;
    std::uint64_t path_cap = 10'000'000; // enumerated-path safety cap
};

/// Visits every path of cost within gamma, from every start vertex, any
/// length >= 1, repeats allowed. Throws OracleCapError past the cap.
void for_each_bounded_path(const WeightedDigraph& g, double gamma, const OracleOptions& opts,
                           const std::function<void(std::span<const int>, double)>& visit);

std::vector<Path> enumerate_bounded_paths(const WeightedDigraph& g, double gamma, OracleOptions opts = {});
std::uint64_t count_bounded_paths(const WeightedDigraph& g, double gamma, OracleOptions opts = {});
std::uint64_t count_bounded_paths_from_root(const WeightedDigraph& g, const VertexId& root, double gamma,
                                            OracleOptions opts = {});

/// Bounded paths whose every one-edge extension at either end overruns
/// the budget.
std::vector<Path> oracle_tight_paths(const WeightedDigraph& g, double gamma, OracleOptions opts = {});

/// Endpoints of the tight paths of the derived edge-weighted graph,
/// deduplicated in first-appearance order.
std::vector<VertexPair> oracle_tight_pairs(const VertexWeightedDag& g, double gamma, OracleOptions opts = {});

/// Literal quantifier evaluation of the tightening definition.
Correspondence oracle_tighten(const Correspondence& r);

} // namespace tightpaths
