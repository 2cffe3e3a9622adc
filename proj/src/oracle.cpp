#include "tightpaths/oracle.hpp"

#include <set>
#include <string>

#include "tightpaths/errors.hpp"

namespace tightpaths {

namespace {

struct BoundedSearch {
    const WeightedDigraph& g;
    double gamma;
    const OracleOptions& opts;
    const std::function<void(std::span<const int>, double)>& visit;
    std::uint64_t visited = 0;
    std::vector<int> current;

    void emit(double cost) {
        if (++visited > opts.path_cap)
            throw OracleCapError("bounded-path enumeration exceeded the cap of " +
                                 std::to_string(opts.path_cap) + " paths");
        visit(current, cost);
    }

    void extend(double cost) {
        emit(cost);
        const int last = current.back();
        for (const auto& e : g.edges()) { // definitional scan, no adjacency index
            if (e.src != last) continue;
            if (!within_budget(cost + e.cost, gamma, opts.tol)) continue;
            current.push_back(e.dst);
            extend(cost + e.cost);
            current.pop_back();
        }
    }

    void run_from(int start) {
        current.assign(1, start);
        extend(0.0);
    }
};

} // namespace

void for_each_bounded_path(const WeightedDigraph& g, double gamma, const OracleOptions& opts,
                           const std::function<void(std::span<const int>, double)>& visit) {
    if (gamma < 0) throw ValidationError("gamma must be >= 0");
    BoundedSearch search{g, gamma, opts, visit};
    for (std::size_t v = 0; v < g.vertex_count(); ++v) search.run_from(static_cast<int>(v));
}

std::vector<Path> enumerate_bounded_paths(const WeightedDigraph& g, double gamma, OracleOptions opts) {
    std::vector<Path> out;
    for_each_bounded_path(g, gamma, opts, [&](std::span<const int> vs, double cost) {
        Path p;
        p.cost = cost;
        for (int v : vs) p.vertices.push_back(g.name(v));
        out.push_back(std::move(p));
    });
    return out;
}

std::uint64_t count_bounded_paths(const WeightedDigraph& g, double gamma, OracleOptions opts) {
    std::uint64_t n = 0;
    for_each_bounded_path(g, gamma, opts, [&](std::span<const int>, double) { ++n; });
    return n;
}

std::uint64_t count_bounded_paths_from_root(const WeightedDigraph& g, const VertexId& root, double gamma,
                                            OracleOptions opts) {
    if (gamma < 0) throw ValidationError("gamma must be >= 0");
    std::uint64_t n = 0;
    std::function<void(std::span<const int>, double)> visit = [&](std::span<const int>, double) { ++n; };
    BoundedSearch search{g, gamma, opts, visit};
    search.run_from(g.index_of(root));
    return n;
}

std::vector<Path> oracle_tight_paths(const WeightedDigraph& g, double gamma, OracleOptions opts) {
    std::vector<Path> out;
    for_each_bounded_path(g, gamma, opts, [&](std::span<const int> vs, double cost) {
        for (const auto& e : g.edges()) {
            const bool prefix_fits = e.dst == vs.front() && within_budget(cost + e.cost, gamma, opts.tol);
            const bool suffix_fits = e.src == vs.back() && within_budget(cost + e.cost, gamma, opts.tol);
            if (prefix_fits || suffix_fits) return; // extensible, not tight
        }
        Path p;
        p.cost = cost;
        for (int v : vs) p.vertices.push_back(g.name(v));
        out.push_back(std::move(p));
    });
    return out;
}

std::vector<VertexPair> oracle_tight_pairs(const VertexWeightedDag& g, double gamma, OracleOptions opts) {
    const WeightedDigraph derived = to_edge_weighted(g);
    std::vector<VertexPair> out;
    std::set<std::pair<int, int>> seen;
    for_each_bounded_path(derived, gamma, opts, [&](std::span<const int> vs, double cost) {
        for (const auto& e : derived.edges()) {
            const bool prefix_fits = e.dst == vs.front() && within_budget(cost + e.cost, gamma, opts.tol);
            const bool suffix_fits = e.src == vs.back() && within_budget(cost + e.cost, gamma, opts.tol);
            if (prefix_fits || suffix_fits) return;
        }
        if (seen.insert({vs.front(), vs.back()}).second)
            out.emplace_back(derived.name(vs.front()), derived.name(vs.back()));
    });
    return out;
}

Correspondence oracle_tighten(const Correspondence& r) {
    const Poset& p = *r.order;
    const auto all = r.pairs();
    Correspondence out;
    out.order = r.order;
    out.preds.resize(r.preds.size());
    for (std::size_t b = 0; b < r.preds.size(); ++b) {
        for (int a : r.preds[b]) {
            bool keep = true;
            for (const auto& [a2name, b2name] : all) {
                const int a2 = p.index_of(a2name);
                const int b2 = p.index_of(b2name);
                if (p.leq(a2, a) && p.leq(static_cast<int>(b), b2) && !(a2 == a && b2 == static_cast<int>(b))) {
                    keep = false;
                    break;
                }
            }
            if (keep) out.preds[b].push_back(a);
        }
    }
    return out;
}

} // namespace tightpaths
