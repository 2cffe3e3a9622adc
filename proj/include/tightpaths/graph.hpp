#pragma once

#include <istream>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace tightpaths {

using VertexId = std::string;
using VertexPair = std::pair<VertexId, VertexId>;

/// Cost sentinel for "no predecessor". Absorbs addition and compares
/// greater than every finite cost.
inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

/// Bound check used by every algorithm: x is within budget gamma,
/// optionally widened by a caller-supplied tolerance (default exact).
inline bool within_budget(double x, double gamma, double tol = 0.0) {
    return x <= gamma + tol;
}

/// A walk through a graph. Vertices may repeat; a single vertex is a
/// path of length 1 and cost 0.
struct Path {
    std::vector<VertexId> vertices;
    double cost = 0.0;
};

/// Path identity is the vertex sequence; the cost is derived from it.
inline bool operator==(const Path& a, const Path& b) { return a.vertices == b.vertices; }
inline bool operator<(const Path& a, const Path& b) { return a.vertices < b.vertices; }

/// Directed graph with strictly positive edge costs. Vertices keep
/// first-appearance order; all adjacency queries report edges in input
/// order. Self-loops are legal, parallel edges are not. Immutable by
/// convention once built.
class WeightedDigraph {
public:
    struct Edge {
        int src;
        int dst;
        double cost;
    };

    int add_vertex(const VertexId& name);
    void add_edge(const VertexId& src, const VertexId& dst, double cost);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<VertexId>& vertices() const { return names_; }
    const VertexId& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    bool has_vertex(const VertexId& name) const { return index_.count(name) != 0; }
    int index_of(const VertexId& name) const; // throws ValidationError when unknown

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const std::pair<int, double>> out_edges(int v) const { return out_[static_cast<std::size_t>(v)]; }
    std::span<const std::pair<int, double>> in_edges(int v) const { return in_[static_cast<std::size_t>(v)]; }

private:
    std::vector<VertexId> names_;
    std::unordered_map<VertexId, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, double>>> out_;
    std::vector<std::vector<std::pair<int, double>>> in_;
    std::vector<std::unordered_set<int>> out_targets_; // parallel-edge rejection
};

/// Acyclic graph given by nonnegative vertex weights with w(src) < w(dst)
/// on every edge; edge costs are derived as weight differences.
class VertexWeightedDag {
public:
    void add_vertex(const VertexId& name, double weight);
    void add_edge(const VertexId& src, const VertexId& dst);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<VertexId>& vertices() const { return names_; }
    const VertexId& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    bool has_vertex(const VertexId& name) const { return index_.count(name) != 0; }
    int index_of(const VertexId& name) const;
    double weight(int v) const { return weights_[static_cast<std::size_t>(v)]; }
    double weight(const VertexId& name) const { return weight(index_of(name)); }
    double edge_cost(int src, int dst) const { return weight(dst) - weight(src); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::span<const int> out_adjacent(int v) const { return out_[static_cast<std::size_t>(v)]; }
    std::span<const int> in_adjacent(int v) const { return in_[static_cast<std::size_t>(v)]; }

    /// Least derived cost over edges entering v; the infinity sentinel
    /// for a source vertex.
    double min_in_cost(int v) const;

private:
    std::vector<VertexId> names_;
    std::unordered_map<VertexId, int> index_;
    std::vector<double> weights_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<std::unordered_set<int>> out_targets_;
};

// --- parsing / rendering ---------------------------------------------------

/// Edge-list format: one `SRC DST COST` per line, `#` comment lines and
/// blank lines ignored. Vertex order is first appearance.
WeightedDigraph parse_edge_list(std::istream& in);
std::string render_edge_list(const WeightedDigraph& g);

/// Vertex-weighted format: `v NAME WEIGHT` lines, then `e SRC DST` lines.
VertexWeightedDag parse_vertex_weighted(std::istream& in);
std::string render_vertex_weighted(const VertexWeightedDag& g);

// --- queries ---------------------------------------------------------------

/// All edges leaving v, in input order.
std::vector<std::pair<VertexId, double>> successors(const WeightedDigraph& g, const VertexId& v);

/// Minimum cost over edges entering v; +infinity when v has none.
double min_predecessor_cost(const WeightedDigraph& g, const VertexId& v);

/// Per-vertex lists of ancestors under the reflexive-transitive edge
/// relation (each list includes the vertex itself), sorted by ascending
/// weight with ties broken by input order.
std::vector<std::vector<int>> ancestor_lists(const VertexWeightedDag& g);

/// Same vertices and edges with cost(u,v) = w(v) - w(u).
WeightedDigraph to_edge_weighted(const VertexWeightedDag& g);

/// Recomputes a vertex sequence's cost straight from the graph; throws
/// ValidationError when consecutive vertices are not joined by an edge.
Path make_path(const WeightedDigraph& g, const std::vector<VertexId>& vertices);

} // namespace tightpaths
