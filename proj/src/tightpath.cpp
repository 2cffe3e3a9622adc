#include "tightpaths/tightpath.hpp"

#include <algorithm>
#include <stdexcept>

#include "tightpaths/errors.hpp"
#include "tightpaths/text.hpp"

namespace tightpaths {

const PathTree::Node& PathTree::node(std::size_t i) const {
    if (i >= nodes_.size()) throw std::out_of_range("path tree node index out of range");
    return nodes_[i];
}

Path reconstruct_path(const WeightedDigraph& g, const PathTree& tree, std::size_t leaf) {
    Path p;
    p.cost = tree.node(leaf).cost;
    for (std::size_t cur = leaf;; cur = tree.node(cur).parent) {
        p.vertices.push_back(g.name(tree.node(cur).vertex));
        if (tree.node(cur).parent == PathTree::kNoParent) break;
    }
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

RootSearchResult tight_paths_from_root_with_tree(const WeightedDigraph& g, const VertexId& root,
                                                 double gamma, double tol) {
    if (gamma < 0) throw ValidationError("gamma must be >= 0");
    const int r = g.index_of(root);
    const double d0 = min_predecessor_cost(g, root);

    PathTree tree(r);
    std::vector<std::size_t> stack{0};
    std::vector<Path> out;

    while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        const int v = tree.node(cur).vertex;
        const double d = tree.node(cur).cost;

        bool extended = false;
        for (const auto& [u, c] : g.out_edges(v)) {
            if (within_budget(d + c, gamma, tol)) {
                stack.push_back(tree.add_child(cur, u, d + c));
                extended = true;
            }
        }
        // Tight at the far end (no extension fits) and at the root end
        // (the cheapest predecessor prefix would overrun the budget).
        if (!extended && !within_budget(d0 + d, gamma, tol))
            out.push_back(reconstruct_path(g, tree, cur));
    }
    return {std::move(out), std::move(tree)};
}

std::vector<Path> tight_paths_from_root(const WeightedDigraph& g, const VertexId& root,
                                        double gamma, double tol) {
    return tight_paths_from_root_with_tree(g, root, gamma, tol).paths;
}

std::vector<Path> all_tight_paths(const WeightedDigraph& g, double gamma, double tol) {
    std::vector<Path> out;
    for (const auto& root : g.vertices()) {
        auto part = tight_paths_from_root(g, root, gamma, tol);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

std::string render_paths(std::span<const Path> paths, char sep) {
    std::string out;
    for (const auto& p : paths) {
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            if (i) out += sep;
            out += p.vertices[i];
        }
        out += '\t';
        out += format_number(p.cost);
        out += '\n';
    }
    return out;
}

} // namespace tightpaths
