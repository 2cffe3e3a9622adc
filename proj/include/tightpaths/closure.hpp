#pragma once

#include <istream>
#include <string>
#include <vector>

#include "tightpaths/graph.hpp"

namespace tightpaths {

/// A finite sequence of sets of items. Duplicate transactions are kept;
/// item order is first appearance across the whole input.
struct TransactionalDataset {
    std::vector<std::string> items;
    std::vector<std::vector<int>> transactions; // sorted, deduplicated item indices
};

/// One transaction per line, whitespace-separated item tokens, `#`
/// comment lines and blank lines skipped.
TransactionalDataset parse_transactions(std::istream& in);
std::string render_transactions(const TransactionalDataset& ds);

using ItemSet = std::vector<int>; // sorted item indices

/// Closed item sets (fixed points of the transaction-intersection
/// closure) with their supports and Hasse cover edges. Vertex order is
/// support descending, ties by set order, which is topological for the
/// subset relation.
struct ClosureLattice {
    std::vector<std::string> items;
    std::vector<ItemSet> sets;
    std::vector<int> supports;
    std::vector<std::pair<int, int>> covers; // (subset, superset) indices

    std::string set_name(int i) const;
    int max_support() const;
};

/// All intersections of nonempty subsets of transactions with support
/// at least minsupp.
ClosureLattice mine_closures(const TransactionalDataset& ds, int minsupp);

enum class EqualSupportCovers {
    Reject,   // throw with guidance
    Contract, // merge the closures joined by the offending edges
};

/// Vertex per closed set, weight ln(max support / support), edges the
/// covers oriented subset to superset. An equal-support cover edge
/// breaks the strict weight increase and is rejected by default.
VertexWeightedDag to_log_weighted_dag(const ClosureLattice& lat,
                                      EqualSupportCovers policy = EqualSupportCovers::Reject);

/// Exact nonnegative rational for confidence thresholds; avoids float
/// rounding when comparing integer-support quotients.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational parse(const std::string& text); // "0.6", ".75", "2/3", "1"
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct BasicAntecedent {
    int antecedent;  // lattice vertex index
    int consequent;  // lattice vertex index
    double confidence;
};

/// Pairs (u,v) of cover-connected closed sets with confidence
/// support(v)/support(u) at least gamma_prime, where every one-step
/// move down at u or up at v drops below it. All comparisons are exact
/// cross-multiplications over integer supports.
std::vector<BasicAntecedent> basic_antecedents(const ClosureLattice& lat, Rational gamma_prime);

/// Lines `ANTECEDENT_ITEMS -> CONSEQUENT_ITEMS <TAB> confidence`.
std::string render_antecedents(const ClosureLattice& lat, const std::vector<BasicAntecedent>& rows);

/// Listing format: `c SET SUPPORT` lines then `h SUB SUP` cover lines.
std::string render_lattice(const ClosureLattice& lat);

} // namespace tightpaths
