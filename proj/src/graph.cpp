#include "tightpaths/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tightpaths/errors.hpp"
#include "tightpaths/text.hpp"

namespace tightpaths {

namespace {

bool is_comment_or_blank(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

} // namespace

// --- WeightedDigraph ---------------------------------------------------------

int WeightedDigraph::add_vertex(const VertexId& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    int idx = static_cast<int>(names_.size());
    names_.push_back(name);
    index_.emplace(name, idx);
    out_.emplace_back();
    in_.emplace_back();
    out_targets_.emplace_back();
    return idx;
}

void WeightedDigraph::add_edge(const VertexId& src, const VertexId& dst, double cost) {
    if (!(cost > 0.0) || !std::isfinite(cost))
        throw ValidationError("edge " + src + " -> " + dst + ": cost must be a finite value > 0");
    int s = add_vertex(src);
    int d = add_vertex(dst);
    if (!out_targets_[static_cast<std::size_t>(s)].insert(d).second)
        throw ValidationError("duplicate edge " + src + " -> " + dst);
    edges_.push_back({s, d, cost});
    out_[static_cast<std::size_t>(s)].emplace_back(d, cost);
    in_[static_cast<std::size_t>(d)].emplace_back(s, cost);
}

int WeightedDigraph::index_of(const VertexId& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ValidationError("unknown vertex: " + name);
    return it->second;
}

// --- VertexWeightedDag -------------------------------------------------------

void VertexWeightedDag::add_vertex(const VertexId& name, double weight) {
    if (index_.count(name)) throw ValidationError("duplicate vertex: " + name);
    if (!(weight >= 0.0) || !std::isfinite(weight))
        throw ValidationError("vertex " + name + ": weight must be a finite value >= 0");
    index_.emplace(name, static_cast<int>(names_.size()));
    names_.push_back(name);
    weights_.push_back(weight);
    out_.emplace_back();
    in_.emplace_back();
    out_targets_.emplace_back();
}

void VertexWeightedDag::add_edge(const VertexId& src, const VertexId& dst) {
    int s = index_of(src);
    int d = index_of(dst);
    if (!(weights_[static_cast<std::size_t>(s)] < weights_[static_cast<std::size_t>(d)]))
        throw ValidationError("edge " + src + " -> " + dst + ": requires w(" + src + ") < w(" + dst + ")");
    if (!out_targets_[static_cast<std::size_t>(s)].insert(d).second)
        throw ValidationError("duplicate edge " + src + " -> " + dst);
    edges_.emplace_back(s, d);
    out_[static_cast<std::size_t>(s)].push_back(d);
    in_[static_cast<std::size_t>(d)].push_back(s);
}

int VertexWeightedDag::index_of(const VertexId& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ValidationError("unknown vertex: " + name);
    return it->second;
}

double VertexWeightedDag::min_in_cost(int v) const {
    double best = kInfiniteCost;
    for (int u : in_[static_cast<std::size_t>(v)]) best = std::min(best, edge_cost(u, v));
    return best;
}

// --- parsing / rendering -----------------------------------------------------

WeightedDigraph parse_edge_list(std::istream& in) {
    WeightedDigraph g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        auto tok = split_ws(line);
        if (tok.size() != 3)
            throw ParseError("line " + std::to_string(lineno) + ": expected `SRC DST COST`");
        double cost;
        if (!parse_number(tok[2], cost))
            throw ParseError("line " + std::to_string(lineno) + ": bad cost value `" + std::string(tok[2]) + "`");
        try {
            g.add_edge(std::string(tok[0]), std::string(tok[1]), cost);
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return g;
}

std::string render_edge_list(const WeightedDigraph& g) {
    std::string out;
    for (const auto& e : g.edges()) {
        out += g.name(e.src);
        out += ' ';
        out += g.name(e.dst);
        out += ' ';
        out += format_number(e.cost);
        out += '\n';
    }
    return out;
}

VertexWeightedDag parse_vertex_weighted(std::istream& in) {
    VertexWeightedDag g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        auto tok = split_ws(line);
        const std::string where = "line " + std::to_string(lineno);
        if (tok[0] == "v") {
            if (tok.size() != 3) throw ParseError(where + ": expected `v NAME WEIGHT`");
            double w;
            if (!parse_number(tok[2], w))
                throw ParseError(where + ": bad weight value `" + std::string(tok[2]) + "`");
            try {
                g.add_vertex(std::string(tok[1]), w);
            } catch (const ValidationError& e) {
                throw ValidationError(where + ": " + e.what());
            }
        } else if (tok[0] == "e") {
            if (tok.size() != 3) throw ParseError(where + ": expected `e SRC DST`");
            try {
                g.add_edge(std::string(tok[1]), std::string(tok[2]));
            } catch (const ValidationError& e) {
                throw ValidationError(where + ": " + e.what());
            }
        } else {
            throw ParseError(where + ": unknown record type `" + std::string(tok[0]) + "`");
        }
    }
    return g;
}

std::string render_vertex_weighted(const VertexWeightedDag& g) {
    std::string out;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        out += "v ";
        out += g.name(static_cast<int>(i));
        out += ' ';
        out += format_number(g.weight(static_cast<int>(i)));
        out += '\n';
    }
    for (const auto& [s, d] : g.edges()) {
        out += "e ";
        out += g.name(s);
        out += ' ';
        out += g.name(d);
        out += '\n';
    }
    return out;
}

// --- queries -----------------------------------------------------------------

std::vector<std::pair<VertexId, double>> successors(const WeightedDigraph& g, const VertexId& v) {
    std::vector<std::pair<VertexId, double>> out;
    for (const auto& [u, c] : g.out_edges(g.index_of(v))) out.emplace_back(g.name(u), c);
    return out;
}

double min_predecessor_cost(const WeightedDigraph& g, const VertexId& v) {
    double best = kInfiniteCost;
    for (const auto& [u, c] : g.in_edges(g.index_of(v))) best = std::min(best, c);
    return best;
}

std::vector<std::vector<int>> ancestor_lists(const VertexWeightedDag& g) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n));
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, v);
        seen[static_cast<std::size_t>(v)] = 1;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            lists[static_cast<std::size_t>(v)].push_back(cur);
            for (int u : g.in_adjacent(cur)) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                }
            }
        }
        auto& lst = lists[static_cast<std::size_t>(v)];
        std::sort(lst.begin(), lst.end(), [&](int a, int b) {
            if (g.weight(a) != g.weight(b)) return g.weight(a) < g.weight(b);
            return a < b;
        });
    }
    return lists;
}

WeightedDigraph to_edge_weighted(const VertexWeightedDag& g) {
    WeightedDigraph out;
    for (const auto& name : g.vertices()) out.add_vertex(name);
    for (const auto& [s, d] : g.edges()) out.add_edge(g.name(s), g.name(d), g.edge_cost(s, d));
    return out;
}

Path make_path(const WeightedDigraph& g, const std::vector<VertexId>& vertices) {
    if (vertices.empty()) throw ValidationError("a path needs at least one vertex");
    Path p;
    p.vertices = vertices;
    int prev = g.index_of(vertices.front());
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        int cur = g.index_of(vertices[i]);
        bool found = false;
        for (const auto& [u, c] : g.out_edges(prev)) {
            if (u == cur) {
                p.cost += c;
                found = true;
                break;
            }
        }
        if (!found)
            throw ValidationError("no edge " + vertices[i - 1] + " -> " + vertices[i]);
        prev = cur;
    }
    return p;
}

} // namespace tightpaths
