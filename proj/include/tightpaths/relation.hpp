#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tightpaths/graph.hpp"

namespace tightpaths {

/// Finite partially ordered set with a precomputed comparability matrix
/// and a fixed linear extension used to keep relation lists sorted.
class Poset {
public:
    /// Builds the reflexive-transitive closure of the given <= pairs.
    /// Throws ValidationError when the closure is not antisymmetric.
    static Poset from_leq_pairs(const std::vector<std::string>& elements,
                                const std::vector<std::pair<std::string, std::string>>& leq_pairs);

    /// Total order in element-list order.
    static Poset chain(const std::vector<std::string>& elements);

    /// Reachability order of an acyclic graph; the linear extension is
    /// ascending weight with ties broken by input order.
    static Poset from_dag(const VertexWeightedDag& g);

    std::size_t size() const { return elems_.size(); }
    const std::vector<std::string>& elements() const { return elems_; }
    const std::string& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
    int index_of(const std::string& name) const;

    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * elems_.size() + static_cast<std::size_t>(b)] != 0; }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    int rank(int i) const { return rank_[static_cast<std::size_t>(i)]; }

private:
    Poset() = default;
    void compute_rank_kahn();

    std::vector<std::string> elems_;
    std::vector<char> leq_; // row-major comparability matrix
    std::vector<int> rank_; // linear extension position per element
    friend int poset_index_lookup(const Poset&, const std::string&);
};

/// Binary relation over one ordered universe, stored as per-element
/// lists R_v = { u : (u,v) in R }. Lists are duplicate-free and sorted
/// by the poset's linear extension so removal passes are merge-like.
struct Correspondence {
    std::shared_ptr<const Poset> order;
    std::vector<std::vector<int>> preds;

    std::size_t pair_count() const;
    bool contains(int u, int v) const;
    /// All pairs (u,v), v in universe order, u in list order.
    std::vector<VertexPair> pairs() const;
};

Correspondence make_correspondence(std::shared_ptr<const Poset> order,
                                   const std::vector<VertexPair>& pairs);

/// Reflexive-transitive reachability of the dag as a correspondence
/// over its own vertex set.
Correspondence reachability_closure(const VertexWeightedDag& g);

/// Pairs (u,v) with u reaching v (reflexively) and w(v) - w(u) within
/// gamma; the relation fed to the three-phase tightening.
Correspondence build_correspondence(const VertexWeightedDag& g, double gamma, double tol = 0.0);

/// Keeps (a,b) when moving a down and/or b up while staying related is
/// impossible. Definitional quadratic scan.
Correspondence tighten(const Correspondence& r);

/// Keeps (a,b) with a minimal among the partners of b.
Correspondence left_tighten(const Correspondence& r);

/// Keeps (a,b) with b maximal among the partners of a. Implemented as
/// the in-place removal pass: for each v and each u strictly below v,
/// drop from R_u whatever also appears in R_v.
Correspondence right_tighten(const Correspondence& r);

/// True iff R only relates comparable pairs downward-up and relating
/// (a,c) forces (a,b) and (b,c) for every b between them.
bool is_convex(const Correspondence& r);

/// Three-phase tightening snapshots, mirroring the CLI debug output.
struct TighteningTrace {
    Correspondence relation;    // phase 1: bounded reachability pairs
    Correspondence after_left;  // phase 2
    Correspondence after_right; // phase 3
};

TighteningTrace tighten_phases(const VertexWeightedDag& g, double gamma, double tol = 0.0);

/// Phases 2-3 on a prebuilt bounded relation (phase 1 output).
std::vector<VertexPair> tight_pairs_of_relation(const Correspondence& bounded);

/// Tight pairs of the dag at threshold gamma via correspondence
/// tightening (build, left-tighten, right-tighten).
std::vector<VertexPair> tight_pairs_via_tightening(const VertexWeightedDag& g, double gamma, double tol = 0.0);

} // namespace tightpaths
