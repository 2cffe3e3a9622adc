#include "tightpaths/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "tightpaths/errors.hpp"
#include "tightpaths/text.hpp"
#include "tightpaths/tightpair.hpp"
#include "tightpaths/tightpath.hpp"

namespace tightpaths {

// --- CSV ----------------------------------------------------------------------

std::string to_csv_row(const BenchRecord& r) {
    char sec[48];
    std::snprintf(sec, sizeof(sec), "%.9f", r.seconds);
    std::string out = r.graph_id;
    out += ',';
    out += r.algo;
    out += ',';
    out += format_number(r.gamma);
    out += ',';
    out += std::isnan(r.seconds) ? "nan" : sec;
    out += ',';
    out += std::to_string(r.repetitions);
    out += ',';
    out += std::to_string(r.output_size);
    out += ',';
    out += std::to_string(r.total_output_length);
    return out;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::vector<BenchRecord> parse_bench_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty CSV input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kBenchCsvHeader)
        throw ParseError("unexpected CSV header: `" + line + "`");
    std::vector<BenchRecord> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != 7) throw ParseError("line " + std::to_string(lineno) + ": expected 7 fields");
        BenchRecord r;
        r.graph_id = f[0];
        r.algo = f[1];
        long long reps, count, total;
        if (!parse_number(f[2], r.gamma) || !parse_integer(f[4], reps) || !parse_integer(f[5], count) ||
            !parse_integer(f[6], total))
            throw ParseError("line " + std::to_string(lineno) + ": bad numeric field");
        if (f[3] == "nan") {
            r.seconds = std::numeric_limits<double>::quiet_NaN();
        } else if (!parse_number(f[3], r.seconds)) {
            throw ParseError("line " + std::to_string(lineno) + ": bad seconds field");
        }
        r.repetitions = static_cast<int>(reps);
        r.output_size = static_cast<std::uint64_t>(count);
        r.total_output_length = static_cast<std::uint64_t>(total);
        out.push_back(std::move(r));
    }
    return out;
}

// --- gamma range ----------------------------------------------------------------

std::vector<double> GammaRange::values() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    return out;
}

GammaRange parse_gamma_range(const std::string& text) {
    auto c1 = text.find(':');
    auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    GammaRange r;
    long long n;
    if (c2 == std::string::npos || !parse_number(std::string_view(text).substr(0, c1), r.lo) ||
        !parse_number(std::string_view(text).substr(c1 + 1, c2 - c1 - 1), r.hi) ||
        !parse_integer(std::string_view(text).substr(c2 + 1), n))
        throw ParseError("bad gamma range `" + text + "`, expected LO:HI:N");
    r.count = static_cast<int>(n);
    if (r.count < 2 || !(r.lo < r.hi)) throw ValidationError("gamma range needs lo < hi and N >= 2");
    return r;
}

// --- bench ----------------------------------------------------------------------

BenchInput BenchInput::from_digraph(std::string id, WeightedDigraph g) {
    BenchInput in;
    in.id = std::move(id);
    in.digraph = std::move(g);
    return in;
}

BenchInput BenchInput::from_dag(std::string id, VertexWeightedDag g) {
    BenchInput in;
    in.id = std::move(id);
    in.derived = to_edge_weighted(g);
    in.closure = reachability_closure(g);
    in.dag = std::move(g);
    return in;
}

bool bench_algo_known(const std::string& algo) {
    return algo == "paths" || algo == "tighten" || algo == "stacked" || algo == "weights";
}

namespace {

struct CellOutput {
    std::uint64_t size = 0;
    std::uint64_t total_len = 0;
};

// Runs one algorithm once; returns the output accounting.
CellOutput run_cell(const BenchInput& in, const std::string& algo, double gamma,
                    const std::optional<VertexId>& root, double tol) {
    CellOutput out;
    if (algo == "paths") {
        const WeightedDigraph& g = in.digraph ? *in.digraph : *in.derived;
        std::vector<Path> paths =
            root ? tight_paths_from_root(g, *root, gamma, tol) : all_tight_paths(g, gamma, tol);
        out.size = paths.size();
        for (const auto& p : paths) out.total_len += p.vertices.size();
        return out;
    }
    std::vector<VertexPair> pairs;
    if (algo == "tighten") {
        pairs = tight_pairs_of_relation([&] {
            Correspondence bounded = *in.closure; // phase 1 filters a copy of the precomputed closure
            for (std::size_t v = 0; v < bounded.preds.size(); ++v) {
                auto& lst = bounded.preds[v];
                lst.erase(std::remove_if(lst.begin(), lst.end(),
                                         [&](int u) {
                                             return !within_budget(in.dag->weight(static_cast<int>(v)) -
                                                                       in.dag->weight(u),
                                                                   gamma, tol);
                                         }),
                          lst.end());
            }
            return bounded;
        }());
    } else if (root) {
        pairs = algo == "stacked" ? tight_pairs_from_root_stacked(*in.dag, *root, gamma, tol)
                                  : tight_pairs_from_root_weights(*in.dag, *root, gamma, tol);
    } else {
        pairs = all_tight_pairs(*in.dag, gamma, algo == "stacked" ? PairAlgo::Stacked : PairAlgo::Weights, tol);
    }
    out.size = pairs.size();
    out.total_len = 2 * pairs.size();
    return out;
}

bool applicable(const BenchInput& in, const std::string& algo) {
    if (algo == "paths") return true; // edge-weighted view always exists
    return in.dag.has_value();
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchInput& input, const std::vector<std::string>& algos,
                                   const GammaRange& range, int repetitions,
                                   const std::optional<VertexId>& root, double tol, int warmup) {
    if (algos.empty()) throw ValidationError("no algorithms selected");
    if (repetitions < 1) throw ValidationError("repetitions must be >= 1");
    for (const auto& a : algos)
        if (!bench_algo_known(a)) throw ValidationError("unknown algorithm id: " + a);

    using clock = std::chrono::steady_clock;
    std::vector<BenchRecord> records;
    for (double gamma : range.values()) {
        for (const auto& algo : algos) {
            BenchRecord r;
            r.graph_id = input.id;
            r.algo = algo;
            r.gamma = gamma;
            r.repetitions = repetitions;
            if (!applicable(input, algo)) {
                r.seconds = std::numeric_limits<double>::quiet_NaN();
                records.push_back(std::move(r));
                continue;
            }
            for (int i = 0; i < warmup; ++i) run_cell(input, algo, gamma, root, tol);
            double total = 0.0;
            CellOutput out;
            for (int i = 0; i < repetitions; ++i) {
                const auto t0 = clock::now();
                out = run_cell(input, algo, gamma, root, tol);
                total += std::chrono::duration<double>(clock::now() - t0).count();
            }
            r.seconds = total / repetitions;
            r.output_size = out.size;
            r.total_output_length = out.total_len;
            records.push_back(std::move(r));
        }
    }
    return records;
}

std::string render_plot_data(const std::vector<BenchRecord>& records) {
    std::map<std::string, std::vector<const BenchRecord*>> per_algo;
    std::vector<std::string> order;
    for (const auto& r : records) {
        if (!per_algo.count(r.algo)) order.push_back(r.algo);
        per_algo[r.algo].push_back(&r);
    }
    std::string out;
    bool first = true;
    for (const auto& algo : order) {
        if (!first) out += "\n\n";
        first = false;
        out += "# " + algo + "\n";
        for (const auto* r : per_algo[algo])
            out += format_number(r->gamma) + " " + (std::isnan(r->seconds) ? "nan" : format_number(r->seconds)) + "\n";
    }
    return out;
}

std::string render_bench_svg(const std::vector<BenchRecord>& records) {
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    std::vector<std::string> order;
    double xmin = 0, xmax = 1, ymax = 1e-12;
    bool any = false;
    for (const auto& r : records) {
        if (std::isnan(r.seconds)) continue;
        if (!series.count(r.algo)) order.push_back(r.algo);
        series[r.algo].emplace_back(r.gamma, r.seconds);
        if (!any) {
            xmin = xmax = r.gamma;
            any = true;
        }
        xmin = std::min(xmin, r.gamma);
        xmax = std::max(xmax, r.gamma);
        ymax = std::max(ymax, r.seconds);
    }
    const double w = 640, h = 400, ml = 70, mr = 20, mt = 20, mb = 45;
    auto px = [&](double x) { return xmax > xmin ? ml + (x - xmin) / (xmax - xmin) * (w - ml - mr) : ml; };
    auto py = [&](double y) { return h - mb - y / ymax * (h - mt - mb); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\"" << h - mb
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << (w / 2) << "\" y=\"" << h - 8 << "\" text-anchor=\"middle\" font-size=\"13\">gamma</text>\n";
    os << "<text x=\"14\" y=\"" << (h / 2) << "\" transform=\"rotate(-90 14," << (h / 2)
       << ")\" text-anchor=\"middle\" font-size=\"13\">seconds</text>\n";
    os << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
       << format_number(ymax) << "</text>\n";
    os << "<text x=\"" << ml << "\" y=\"" << h - mb + 16 << "\" text-anchor=\"middle\" font-size=\"11\">"
       << format_number(xmin) << "</text>\n";
    os << "<text x=\"" << w - mr << "\" y=\"" << h - mb + 16 << "\" text-anchor=\"end\" font-size=\"11\">"
       << format_number(xmax) << "</text>\n";
    int ci = 0;
    for (const auto& algo : order) {
        auto pts = series[algo];
        std::sort(pts.begin(), pts.end());
        const char* color = kColors[ci % 6];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : pts) os << px(x) << "," << py(y) << " ";
        os << "\"/>\n";
        os << "<text x=\"" << w - mr - 6 << "\" y=\"" << mt + 14 + 16 * ci << "\" text-anchor=\"end\" font-size=\"12\" fill=\""
           << color << "\">" << algo << "</text>\n";
        ++ci;
    }
    os << "</svg>\n";
    return os.str();
}

// --- verify -----------------------------------------------------------------------

bool VerifyReport::match() const {
    for (const auto& c : comparisons)
        if (!c.match()) return false;
    return true;
}

VerifyComparison compare_sets(std::string subject, std::string reference,
                              std::vector<std::string> subject_items,
                              std::vector<std::string> reference_items) {
    VerifyComparison cmp;
    cmp.subject = std::move(subject);
    cmp.reference = std::move(reference);
    std::set<std::string> a(subject_items.begin(), subject_items.end());
    std::set<std::string> b(reference_items.begin(), reference_items.end());
    for (const auto& x : b)
        if (!a.count(x)) cmp.missing_from_subject.push_back(x);
    for (const auto& x : a)
        if (!b.count(x)) cmp.missing_from_reference.push_back(x);
    return cmp;
}

namespace {

std::vector<std::string> path_keys(const std::vector<Path>& paths) {
    std::vector<std::string> out;
    for (const auto& p : paths) {
        std::string k;
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            if (i) k += ' ';
            k += p.vertices[i];
        }
        out.push_back(std::move(k));
    }
    return out;
}

std::vector<std::string> pair_keys(const std::vector<VertexPair>& pairs) {
    std::vector<std::string> out;
    for (const auto& [u, v] : pairs) out.push_back(u + "\t" + v);
    return out;
}

} // namespace

VerifyReport verify_digraph(const WeightedDigraph& g, double gamma, const OracleOptions& opts) {
    VerifyReport rep;
    rep.gamma = gamma;
    std::vector<Path> expected;
    try {
        expected = oracle_tight_paths(g, gamma, opts);
    } catch (const OracleCapError&) {
        rep.cap_exceeded = true;
        return rep;
    }
    rep.comparisons.push_back(
        compare_sets("paths", "oracle", path_keys(all_tight_paths(g, gamma, opts.tol)), path_keys(expected)));
    return rep;
}

VerifyReport verify_dag(const VertexWeightedDag& g, double gamma, const OracleOptions& opts) {
    VerifyReport rep;
    rep.gamma = gamma;
    std::vector<std::string> expected;
    try {
        expected = pair_keys(oracle_tight_pairs(g, gamma, opts));
    } catch (const OracleCapError&) {
        rep.cap_exceeded = true;
        return rep;
    }
    rep.comparisons.push_back(
        compare_sets("tighten", "oracle", pair_keys(all_tight_pairs(g, gamma, PairAlgo::Tighten, opts.tol)), expected));
    rep.comparisons.push_back(
        compare_sets("stacked", "oracle", pair_keys(all_tight_pairs(g, gamma, PairAlgo::Stacked, opts.tol)), expected));
    rep.comparisons.push_back(
        compare_sets("weights", "oracle", pair_keys(all_tight_pairs(g, gamma, PairAlgo::Weights, opts.tol)), expected));
    // Tight-path endpoints on the derived graph project onto the pairs.
    std::set<std::string> endpoint_set;
    std::vector<std::string> endpoints;
    for (const auto& p : all_tight_paths(to_edge_weighted(g), gamma, opts.tol)) {
        std::string k = p.vertices.front() + "\t" + p.vertices.back();
        if (endpoint_set.insert(k).second) endpoints.push_back(std::move(k));
    }
    rep.comparisons.push_back(compare_sets("paths-endpoints", "oracle", std::move(endpoints), expected));
    return rep;
}

void print_verify_report(std::ostream& os, const VerifyReport& report) {
    if (report.cap_exceeded) {
        os << "gamma=" << format_number(report.gamma) << "\tunverifiable (oracle cap exceeded)\n";
        return;
    }
    for (const auto& c : report.comparisons) {
        os << "gamma=" << format_number(report.gamma) << "\t" << c.subject << " vs " << c.reference << ": ";
        if (c.match()) {
            os << "match\n";
            continue;
        }
        os << "MISMATCH";
        if (!c.missing_from_subject.empty()) {
            os << " missing-from-" << c.subject << ": [";
            for (std::size_t i = 0; i < c.missing_from_subject.size(); ++i)
                os << (i ? ", " : "") << c.missing_from_subject[i];
            os << "]";
        }
        if (!c.missing_from_reference.empty()) {
            os << " missing-from-" << c.reference << ": [";
            for (std::size_t i = 0; i < c.missing_from_reference.size(); ++i)
                os << (i ? ", " : "") << c.missing_from_reference[i];
            os << "]";
        }
        os << "\n";
    }
}

int verify_exit_code(const std::vector<VerifyReport>& reports) {
    bool cap = false;
    for (const auto& r : reports) {
        if (!r.match()) return 3;
        cap = cap || r.cap_exceeded;
    }
    return cap ? 4 : 0;
}

} // namespace tightpaths
