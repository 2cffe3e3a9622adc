#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tightpaths/graph.hpp"

namespace tightpaths {

/// Bookkeeping tree for one root. Each node is a surrogate for one way
/// of reaching a graph vertex: (vertex, parent link, accumulated cost).
/// A graph vertex appears once per distinct arriving path. Parent links
/// never change once set.
class PathTree {
public:
    static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

    struct Node {
        int vertex;
        std::size_t parent;
        double cost;
    };

    explicit PathTree(int root_vertex) { nodes_.push_back({root_vertex, kNoParent, 0.0}); }

    std::size_t add_child(std::size_t parent, int vertex, double cost) {
        nodes_.push_back({vertex, parent, cost});
        return nodes_.size() - 1;
    }

    const Node& node(std::size_t i) const;
    std::size_t size() const { return nodes_.size(); }

private:
    std::vector<Node> nodes_;
};

/// Vertex sequence from the root down to the given node, with the
/// node's accumulated cost. Throws std::out_of_range on a bad index.
Path reconstruct_path(const WeightedDigraph& g, const PathTree& tree, std::size_t leaf);

struct RootSearchResult {
    std::vector<Path> paths;
    PathTree tree;
};

/// Tight paths starting at root, together with the finished tree.
/// Stack entries are tree-node indices; a node's path is emitted when
/// no successor extension fits the budget and neither does prefixing
/// the root's closest predecessor.
RootSearchResult tight_paths_from_root_with_tree(const WeightedDigraph& g, const VertexId& root,
                                                 double gamma, double tol = 0.0);

std::vector<Path> tight_paths_from_root(const WeightedDigraph& g, const VertexId& root,
                                        double gamma, double tol = 0.0);

/// Union over every vertex taken as root, in vertex input order;
/// within one root, discovery (emission) order.
std::vector<Path> all_tight_paths(const WeightedDigraph& g, double gamma, double tol = 0.0);

/// One path per line: vertices separated by `sep`, then a tab and the
/// total cost.
std::string render_paths(std::span<const Path> paths, char sep = ' ');

} // namespace tightpaths
