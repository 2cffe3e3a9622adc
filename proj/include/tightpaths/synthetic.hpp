#pragma once

#include <cstdint>
#include <string>

namespace tightpaths {

/// Deterministic xorshift-style generator so emitted files are
/// byte-identical across platforms for a fixed seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

/// Hub vertex with `loops` three-vertex cycles of total cost 4 hanging
/// off it; loops=2 is the classic two-loop benchmark graph. Edge-list
/// text.
std::string gen_double_loop(int loops = 2);

/// Complete layered dag: source, `layers` rows of `width` vertices with
/// strictly increasing per-layer weights, sink. Vertex-weighted text.
std::string gen_layered_lattice(int layers, int width);

/// Random dag on n vertices with ascending weights; forward edges kept
/// with probability tuned to the requested average out-degree.
std::string gen_random_dag(int n, double avg_out_degree, std::uint64_t seed);

} // namespace tightpaths
