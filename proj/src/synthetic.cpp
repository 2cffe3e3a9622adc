#include "tightpaths/synthetic.hpp"

#include <algorithm>

#include "tightpaths/errors.hpp"
#include "tightpaths/text.hpp"

namespace tightpaths {

std::string gen_double_loop(int loops) {
    if (loops < 1) throw ValidationError("double-loop needs at least 1 loop");
    std::string out = "A B 2\nB C 1\nC A 1\n";
    if (loops >= 2) out += "A D 1\nD E 2\nE A 1\n";
    for (int i = 3; i <= loops; ++i) {
        const std::string x = "B" + std::to_string(i);
        const std::string y = "C" + std::to_string(i);
        out += "A " + x + " 2\n" + x + " " + y + " 1\n" + y + " A 1\n";
    }
    return out;
}

std::string gen_layered_lattice(int layers, int width) {
    if (layers < 1 || width < 1) throw ValidationError("layered-lattice needs layers >= 1 and width >= 1");
    std::string out = "v s 0\n";
    auto vname = [](int layer, int j) { return "L" + std::to_string(layer) + "_" + std::to_string(j); };
    for (int l = 1; l <= layers; ++l)
        for (int j = 0; j < width; ++j)
            out += "v " + vname(l, j) + " " + format_number(l + j * 1e-6) + "\n";
    out += "v t " + format_number(layers + 1.0) + "\n";
    for (int j = 0; j < width; ++j) out += "e s " + vname(1, j) + "\n";
    for (int l = 1; l < layers; ++l)
        for (int j = 0; j < width; ++j)
            for (int k = 0; k < width; ++k) out += "e " + vname(l, j) + " " + vname(l + 1, k) + "\n";
    for (int j = 0; j < width; ++j) out += "e " + vname(layers, j) + " t\n";
    return out;
}

std::string gen_random_dag(int n, double avg_out_degree, std::uint64_t seed) {
    if (n < 1) throw ValidationError("random-dag needs n >= 1");
    if (avg_out_degree < 0) throw ValidationError("average out-degree must be >= 0");
    SplitMix64 rng(seed);
    std::string out;
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        w[static_cast<std::size_t>(i)] = i + 0.5 * rng.unit();
        out += "v v" + std::to_string(i) + " " + format_number(w[static_cast<std::size_t>(i)]) + "\n";
    }
    const double p = n > 1 ? std::min(1.0, avg_out_degree / (static_cast<double>(n - 1) / 2.0)) : 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < p) out += "e v" + std::to_string(i) + " v" + std::to_string(j) + "\n";
    return out;
}

} // namespace tightpaths
