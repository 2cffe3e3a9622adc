#include "tightpaths/tightpair.hpp"

#include "tightpaths/errors.hpp"
#include "tightpaths/relation.hpp"

namespace tightpaths {

std::vector<VertexPair> tight_pairs_from_root_stacked(const VertexWeightedDag& g, const VertexId& root,
                                                      double gamma, double tol) {
    if (gamma < 0) throw ValidationError("gamma must be >= 0");
    const int r = g.index_of(root);
    const double d0 = g.min_in_cost(r);

    std::vector<VertexPair> out;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::pair<int, double>> stack{{r, 0.0}};

    while (!stack.empty()) {
        const auto [v, d] = stack.back();
        stack.pop_back();
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = 1;

        bool mayextend = false;
        for (int u : g.out_adjacent(v)) {
            const double du = d + g.edge_cost(v, u);
            if (within_budget(du, gamma, tol)) {
                if (!seen[static_cast<std::size_t>(u)]) stack.emplace_back(u, du);
                mayextend = true;
            }
        }
        if (!mayextend && !within_budget(d0 + d, gamma, tol)) out.emplace_back(root, g.name(v));
    }
    return out;
}

std::vector<VertexPair> tight_pairs_from_root_weights(const VertexWeightedDag& g, const VertexId& root,
                                                      double gamma, double tol) {
    if (gamma < 0) throw ValidationError("gamma must be >= 0");
    const int r = g.index_of(root);
    const double wroot = g.weight(r);
    const double d0 = g.min_in_cost(r);

    std::vector<VertexPair> out;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{r};

    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = 1;

        bool mayextend = false;
        for (int u : g.out_adjacent(v)) {
            if (within_budget(g.weight(u) - wroot, gamma, tol)) {
                if (!seen[static_cast<std::size_t>(u)]) stack.push_back(u);
                mayextend = true;
            }
        }
        if (!mayextend && !within_budget(d0 + g.weight(v) - wroot, gamma, tol))
            out.emplace_back(root, g.name(v));
    }
    return out;
}

std::vector<VertexPair> all_tight_pairs(const VertexWeightedDag& g, double gamma, PairAlgo variant,
                                        double tol) {
    if (variant == PairAlgo::Tighten) return tight_pairs_via_tightening(g, gamma, tol);
    std::vector<VertexPair> out;
    for (const auto& root : g.vertices()) {
        auto part = variant == PairAlgo::Stacked
                        ? tight_pairs_from_root_stacked(g, root, gamma, tol)
                        : tight_pairs_from_root_weights(g, root, gamma, tol);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace tightpaths
