#include "tightpaths/closure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

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

ItemSet intersect(const ItemSet& a, const ItemSet& b) {
    ItemSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool subset_of(const ItemSet& a, const ItemSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

TransactionalDataset parse_transactions(std::istream& in) {
    TransactionalDataset ds;
    std::unordered_map<std::string, int> idx;
    std::string line;
    while (std::getline(in, line)) {
        if (is_comment_or_blank(line)) continue;
        std::vector<int> txn;
        for (auto tok : split_ws(line)) {
            std::string item(tok);
            auto it = idx.find(item);
            int i;
            if (it == idx.end()) {
                i = static_cast<int>(ds.items.size());
                ds.items.push_back(item);
                idx.emplace(std::move(item), i);
            } else {
                i = it->second;
            }
            txn.push_back(i);
        }
        std::sort(txn.begin(), txn.end());
        txn.erase(std::unique(txn.begin(), txn.end()), txn.end());
        ds.transactions.push_back(std::move(txn));
    }
    if (ds.transactions.empty()) throw ParseError("no transactions in input");
    return ds;
}

std::string render_transactions(const TransactionalDataset& ds) {
    std::string out;
    for (const auto& txn : ds.transactions) {
        for (std::size_t i = 0; i < txn.size(); ++i) {
            if (i) out += ' ';
            out += ds.items[static_cast<std::size_t>(txn[i])];
        }
        out += '\n';
    }
    return out;
}

std::string ClosureLattice::set_name(int i) const {
    const auto& s = sets[static_cast<std::size_t>(i)];
    if (s.empty()) return "{}";
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += ',';
        out += items[static_cast<std::size_t>(s[k])];
    }
    return out;
}

int ClosureLattice::max_support() const {
    int best = 0;
    for (int s : supports) best = std::max(best, s);
    return best;
}

ClosureLattice mine_closures(const TransactionalDataset& ds, int minsupp) {
    if (minsupp < 1) throw ValidationError("minsupp must be >= 1");
    if (ds.transactions.empty()) throw ValidationError("empty dataset");

    // Closure of the transaction family under pairwise intersection.
    std::set<ItemSet> family(ds.transactions.begin(), ds.transactions.end());
    std::vector<ItemSet> work(family.begin(), family.end());
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            ItemSet inter = intersect(work[i], work[j]);
            if (family.insert(inter).second) work.push_back(std::move(inter));
        }
    }

    ClosureLattice lat;
    lat.items = ds.items;
    for (const auto& s : family) {
        int supp = 0;
        for (const auto& txn : ds.transactions)
            if (subset_of(s, txn)) ++supp;
        if (supp >= minsupp) {
            lat.sets.push_back(s);
            lat.supports.push_back(supp);
        }
    }

    std::vector<int> order(lat.sets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (lat.supports[static_cast<std::size_t>(a)] != lat.supports[static_cast<std::size_t>(b)])
            return lat.supports[static_cast<std::size_t>(a)] > lat.supports[static_cast<std::size_t>(b)];
        return lat.sets[static_cast<std::size_t>(a)] < lat.sets[static_cast<std::size_t>(b)];
    });
    std::vector<ItemSet> sets;
    std::vector<int> supports;
    for (int i : order) {
        sets.push_back(lat.sets[static_cast<std::size_t>(i)]);
        supports.push_back(lat.supports[static_cast<std::size_t>(i)]);
    }
    lat.sets = std::move(sets);
    lat.supports = std::move(supports);

    const int n = static_cast<int>(lat.sets.size());
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const auto& x = lat.sets[static_cast<std::size_t>(a)];
            const auto& y = lat.sets[static_cast<std::size_t>(b)];
            if (x.size() >= y.size() || !subset_of(x, y)) continue;
            bool cover = true;
            for (int z = 0; z < n && cover; ++z) {
                if (z == a || z == b) continue;
                const auto& m = lat.sets[static_cast<std::size_t>(z)];
                if (x.size() < m.size() && m.size() < y.size() && subset_of(x, m) && subset_of(m, y))
                    cover = false;
            }
            if (cover) lat.covers.emplace_back(a, b);
        }
    }
    std::sort(lat.covers.begin(), lat.covers.end());
    return lat;
}

VertexWeightedDag to_log_weighted_dag(const ClosureLattice& lat, EqualSupportCovers policy) {
    if (lat.sets.empty()) throw ValidationError("empty lattice");
    const int n = static_cast<int>(lat.sets.size());

    // Union-find over the contraction classes (identity unless some
    // equal-support cover is contracted).
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };

    for (const auto& [a, b] : lat.covers) {
        if (lat.supports[static_cast<std::size_t>(a)] == lat.supports[static_cast<std::size_t>(b)]) {
            if (policy == EqualSupportCovers::Reject)
                throw ValidationError("cover edge " + lat.set_name(a) + " -> " + lat.set_name(b) +
                                      " has equal supports; log-scaling needs strictly decreasing "
                                      "supports (contract equal-support covers or raise minsupp)");
            int ra = find(a), rb = find(b);
            if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
        }
    }

    const double top = static_cast<double>(lat.max_support());
    VertexWeightedDag g;
    std::vector<char> added(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        if (added[static_cast<std::size_t>(r)]) continue;
        added[static_cast<std::size_t>(r)] = 1;
        g.add_vertex(lat.set_name(r), std::log(top / lat.supports[static_cast<std::size_t>(r)]));
    }
    std::set<std::pair<int, int>> emitted;
    for (const auto& [a, b] : lat.covers) {
        const int ra = find(a), rb = find(b);
        if (ra == rb) continue;
        if (emitted.insert({ra, rb}).second) g.add_edge(lat.set_name(ra), lat.set_name(rb));
    }
    return g;
}

Rational Rational::parse(const std::string& text) {
    auto fail = [&]() -> Rational { throw ParseError("bad rational value `" + text + "`"); };
    if (text.empty()) return fail();
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long p, q;
        if (!parse_integer(std::string_view(text).substr(0, slash), p) ||
            !parse_integer(std::string_view(text).substr(slash + 1), q) || q <= 0 || p < 0)
            return fail();
        long long g = std::gcd(p, q);
        return {p / g, q / g};
    }
    auto dot = text.find('.');
    std::string digits = dot == std::string::npos ? text : text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac = dot == std::string::npos ? 0 : text.size() - dot - 1;
    if (digits.empty() || frac > 17) return fail();
    long long p;
    if (!parse_integer(digits, p) || p < 0) return fail();
    long long q = 1;
    for (std::size_t i = 0; i < frac; ++i) q *= 10;
    long long g = std::gcd(p == 0 ? q : p, q);
    return {p / g, q / g};
}

namespace {

// support(a)/support(b) >= num/den, exactly.
bool conf_at_least(long long a, long long b, const Rational& t) {
    return static_cast<__int128>(a) * t.den >= static_cast<__int128>(t.num) * b;
}

} // namespace

std::vector<BasicAntecedent> basic_antecedents(const ClosureLattice& lat, Rational gamma_prime) {
    if (gamma_prime.den <= 0 || gamma_prime.num <= 0 || gamma_prime.num > gamma_prime.den)
        throw ValidationError("confidence threshold must lie in (0, 1]");
    const int n = static_cast<int>(lat.sets.size());
    std::vector<std::vector<int>> up(static_cast<std::size_t>(n)), down(static_cast<std::size_t>(n));
    for (const auto& [a, b] : lat.covers) {
        up[static_cast<std::size_t>(a)].push_back(b);
        down[static_cast<std::size_t>(b)].push_back(a);
    }

    std::vector<BasicAntecedent> out;
    std::vector<char> seen(static_cast<std::size_t>(n));
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        const long long sroot = lat.supports[static_cast<std::size_t>(root)];
        // Cover-predecessor of the root with the smallest support gives
        // the best (largest) confidence among one-step moves down.
        long long best_pred = -1;
        for (int p : down[static_cast<std::size_t>(root)]) {
            const long long sp = lat.supports[static_cast<std::size_t>(p)];
            if (best_pred < 0 || sp < best_pred) best_pred = sp;
        }

        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, root);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            if (seen[static_cast<std::size_t>(v)]) continue;
            seen[static_cast<std::size_t>(v)] = 1;
            const long long sv = lat.supports[static_cast<std::size_t>(v)];

            bool mayextend = false;
            for (int x : up[static_cast<std::size_t>(v)]) {
                if (conf_at_least(lat.supports[static_cast<std::size_t>(x)], sroot, gamma_prime)) {
                    if (!seen[static_cast<std::size_t>(x)]) stack.push_back(x);
                    mayextend = true;
                }
            }
            if (!mayextend && (best_pred < 0 || !conf_at_least(sv, best_pred, gamma_prime)))
                out.push_back({root, v, static_cast<double>(sv) / static_cast<double>(sroot)});
        }
    }
    return out;
}

std::string render_antecedents(const ClosureLattice& lat, const std::vector<BasicAntecedent>& rows) {
    std::string out;
    char buf[64];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.6g", r.confidence);
        out += lat.set_name(r.antecedent);
        out += " -> ";
        out += lat.set_name(r.consequent);
        out += '\t';
        out += buf;
        out += '\n';
    }
    return out;
}

std::string render_lattice(const ClosureLattice& lat) {
    std::string out;
    for (std::size_t i = 0; i < lat.sets.size(); ++i) {
        out += "c ";
        out += lat.set_name(static_cast<int>(i));
        out += ' ';
        out += std::to_string(lat.supports[i]);
        out += '\n';
    }
    for (const auto& [a, b] : lat.covers) {
        out += "h ";
        out += lat.set_name(a);
        out += ' ';
        out += lat.set_name(b);
        out += '\n';
    }
    return out;
}

} // namespace tightpaths
