#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tightpaths/graph.hpp"
#include "tightpaths/oracle.hpp"
#include "tightpaths/relation.hpp"

namespace tightpaths {

/// One benchmark cell. seconds is the mean wall time over repetitions,
/// measured on the monotonic clock; NaN marks an algorithm that does
/// not apply to the graph kind.
struct BenchRecord {
    std::string graph_id;
    std::string algo;
    double gamma = 0.0;
    double seconds = 0.0;
    int repetitions = 1;
    std::uint64_t output_size = 0;         // paths or pairs found
    std::uint64_t total_output_length = 0; // sum of path lengths; pairs count x 2
};

inline const char* kBenchCsvHeader = "graph,algo,gamma,seconds,reps,count,total_len";

std::string to_csv_row(const BenchRecord& r);
std::vector<BenchRecord> parse_bench_csv(std::istream& in);

struct GammaRange {
    double lo = 0.0;
    double hi = 0.0;
    int count = 2;

    std::vector<double> values() const; // equally spaced, inclusive
};

GammaRange parse_gamma_range(const std::string& text); // "LO:HI:N"

/// A loaded benchmark subject. Vertex-weighted inputs carry the derived
/// edge-weighted graph and the reachability closure, both precomputed
/// so timings cover only the algorithms proper.
struct BenchInput {
    std::string id;
    std::optional<WeightedDigraph> digraph;
    std::optional<VertexWeightedDag> dag;
    std::optional<WeightedDigraph> derived;  // to_edge_weighted(dag)
    std::optional<Correspondence> closure;   // reachability_closure(dag)

    static BenchInput from_digraph(std::string id, WeightedDigraph g);
    static BenchInput from_dag(std::string id, VertexWeightedDag g);
};

/// Known algorithm ids: paths, tighten, stacked, weights.
bool bench_algo_known(const std::string& algo);

std::vector<BenchRecord> run_bench(const BenchInput& input, const std::vector<std::string>& algos,
                                   const GammaRange& range, int repetitions,
                                   const std::optional<VertexId>& root = std::nullopt, double tol = 0.0,
                                   int warmup = 0);

/// Gnuplot-friendly layout: one index block per algorithm, blank-line
/// separated, `gamma seconds` rows.
std::string render_plot_data(const std::vector<BenchRecord>& records);

/// Minimal self-contained SVG line chart of seconds against gamma.
std::string render_bench_svg(const std::vector<BenchRecord>& records);

// --- differential verification ----------------------------------------------

struct VerifyComparison {
    std::string subject;                      // algorithm label
    std::string reference;                    // what it was checked against
    std::vector<std::string> missing_from_subject;
    std::vector<std::string> missing_from_reference;

    bool match() const { return missing_from_subject.empty() && missing_from_reference.empty(); }
};

struct VerifyReport {
    double gamma = 0.0;
    bool cap_exceeded = false; // oracle gave up; distinct from a mismatch
    std::vector<VerifyComparison> comparisons;

    bool match() const;
};

/// Symmetric difference of two labeled string sets.
VerifyComparison compare_sets(std::string subject, std::string reference,
                              std::vector<std::string> subject_items,
                              std::vector<std::string> reference_items);

/// Tight-path search against the exhaustive oracle.
VerifyReport verify_digraph(const WeightedDigraph& g, double gamma, const OracleOptions& opts = {});

/// All four tight-pair routes against the oracle.
VerifyReport verify_dag(const VertexWeightedDag& g, double gamma, const OracleOptions& opts = {});

void print_verify_report(std::ostream& os, const VerifyReport& report);

/// 0 all match, 3 any mismatch, 4 only cap overruns.
int verify_exit_code(const std::vector<VerifyReport>& reports);

} // namespace tightpaths
