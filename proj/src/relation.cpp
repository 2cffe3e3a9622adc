#include "tightpaths/relation.hpp"

#include <algorithm>
#include <unordered_map>

#include "tightpaths/errors.hpp"

namespace tightpaths {

namespace {

std::unordered_map<std::string, int> build_index(const std::vector<std::string>& elems) {
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (!idx.emplace(elems[i], static_cast<int>(i)).second)
            throw ValidationError("duplicate element: " + elems[i]);
    }
    return idx;
}

} // namespace

// --- Poset -------------------------------------------------------------------

int Poset::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i] == name) return static_cast<int>(i);
    throw ValidationError("unknown element: " + name);
}

Poset Poset::from_leq_pairs(const std::vector<std::string>& elements,
                            const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
    Poset p;
    p.elems_ = elements;
    auto idx = build_index(elements);
    const std::size_t n = elements.size();
    p.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
    for (const auto& [a, b] : leq_pairs) {
        auto ia = idx.find(a);
        auto ib = idx.find(b);
        if (ia == idx.end()) throw ValidationError("unknown element: " + a);
        if (ib == idx.end()) throw ValidationError("unknown element: " + b);
        p.leq_[static_cast<std::size_t>(ia->second) * n + static_cast<std::size_t>(ib->second)] = 1;
    }
    // Warshall closure, then antisymmetry check.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (p.leq_[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p.leq_[i * n + j] && p.leq_[j * n + i])
                throw ValidationError("not a partial order: " + elements[i] + " and " + elements[j] +
                                      " are mutually below each other");
    p.compute_rank_kahn();
    return p;
}

Poset Poset::chain(const std::vector<std::string>& elements) {
    Poset p;
    p.elems_ = elements;
    build_index(elements); // duplicate check
    const std::size_t n = elements.size();
    p.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) p.leq_[i * n + j] = 1;
    p.rank_.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.rank_[i] = static_cast<int>(i);
    return p;
}

Poset Poset::from_dag(const VertexWeightedDag& g) {
    Poset p;
    p.elems_ = g.vertices();
    const std::size_t n = p.elems_.size();
    p.leq_.assign(n * n, 0);
    auto lists = ancestor_lists(g);
    for (std::size_t v = 0; v < n; ++v)
        for (int u : lists[v]) p.leq_[static_cast<std::size_t>(u) * n + v] = 1;
    // Ascending weight is a linear extension; ties are incomparable.
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.weight(a) != g.weight(b)) return g.weight(a) < g.weight(b);
        return a < b;
    });
    p.rank_.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.rank_[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    return p;
}

void Poset::compute_rank_kahn() {
    const std::size_t n = elems_.size();
    rank_.assign(n, -1);
    std::vector<char> placed(n, 0);
    for (std::size_t pos = 0; pos < n; ++pos) {
        // Lowest-index element whose strict predecessors are all placed.
        std::size_t pick = n;
        for (std::size_t i = 0; i < n && pick == n; ++i) {
            if (placed[i]) continue;
            bool ready = true;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i && !placed[j] && leq_[j * n + i]) {
                    ready = false;
                    break;
                }
            }
            if (ready) pick = i;
        }
        placed[pick] = 1;
        rank_[pick] = static_cast<int>(pos);
    }
}

// --- Correspondence ----------------------------------------------------------

std::size_t Correspondence::pair_count() const {
    std::size_t n = 0;
    for (const auto& lst : preds) n += lst.size();
    return n;
}

bool Correspondence::contains(int u, int v) const {
    const auto& lst = preds[static_cast<std::size_t>(v)];
    return std::find(lst.begin(), lst.end(), u) != lst.end();
}

std::vector<VertexPair> Correspondence::pairs() const {
    std::vector<VertexPair> out;
    for (std::size_t v = 0; v < preds.size(); ++v)
        for (int u : preds[v]) out.emplace_back(order->element(u), order->element(static_cast<int>(v)));
    return out;
}

namespace {

void sort_by_rank(const Poset& p, std::vector<int>& lst) {
    std::sort(lst.begin(), lst.end(), [&](int a, int b) { return p.rank(a) < p.rank(b); });
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
}

} // namespace

Correspondence make_correspondence(std::shared_ptr<const Poset> order,
                                   const std::vector<VertexPair>& pairs) {
    Correspondence r;
    r.preds.resize(order->size());
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < order->size(); ++i) idx.emplace(order->element(static_cast<int>(i)), static_cast<int>(i));
    for (const auto& [a, b] : pairs) {
        auto ia = idx.find(a);
        auto ib = idx.find(b);
        if (ia == idx.end()) throw ValidationError("unknown element: " + a);
        if (ib == idx.end()) throw ValidationError("unknown element: " + b);
        r.preds[static_cast<std::size_t>(ib->second)].push_back(ia->second);
    }
    for (auto& lst : r.preds) sort_by_rank(*order, lst);
    r.order = std::move(order);
    return r;
}

Correspondence reachability_closure(const VertexWeightedDag& g) {
    Correspondence r;
    r.order = std::make_shared<Poset>(Poset::from_dag(g));
    r.preds = ancestor_lists(g); // already rank-sorted
    return r;
}

Correspondence build_correspondence(const VertexWeightedDag& g, double gamma, double tol) {
    if (gamma < 0) throw ValidationError("gamma must be >= 0");
    Correspondence r = reachability_closure(g);
    for (std::size_t v = 0; v < r.preds.size(); ++v) {
        auto& lst = r.preds[v];
        lst.erase(std::remove_if(lst.begin(), lst.end(),
                                 [&](int u) {
                                     return !within_budget(g.weight(static_cast<int>(v)) - g.weight(u), gamma, tol);
                                 }),
                  lst.end());
    }
    return r;
}

Correspondence tighten(const Correspondence& r) {
    const Poset& p = *r.order;
    Correspondence out;
    out.order = r.order;
    out.preds.resize(r.preds.size());
    for (std::size_t b = 0; b < r.preds.size(); ++b) {
        for (int a : r.preds[b]) {
            bool keep = true;
            for (std::size_t b2 = 0; b2 < r.preds.size() && keep; ++b2) {
                if (!p.leq(static_cast<int>(b), static_cast<int>(b2))) continue;
                for (int a2 : r.preds[b2]) {
                    if (!p.leq(a2, a)) continue;
                    if (a2 != a || b2 != b) {
                        keep = false;
                        break;
                    }
                }
            }
            if (keep) out.preds[b].push_back(a);
        }
    }
    return out;
}

Correspondence left_tighten(const Correspondence& r) {
    const Poset& p = *r.order;
    Correspondence out;
    out.order = r.order;
    out.preds.resize(r.preds.size());
    for (std::size_t b = 0; b < r.preds.size(); ++b) {
        const auto& lst = r.preds[b];
        for (int a : lst) {
            bool minimal = true;
            for (int a2 : lst) {
                if (p.less(a2, a)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.preds[b].push_back(a);
        }
    }
    return out;
}

Correspondence right_tighten(const Correspondence& r) {
    const Poset& p = *r.order;
    Correspondence out = r;
    const int n = static_cast<int>(r.preds.size());
    std::vector<int> diff;
    for (int v = 0; v < n; ++v) {
        const auto& top = out.preds[static_cast<std::size_t>(v)];
        if (top.empty()) continue;
        for (int u = 0; u < n; ++u) {
            if (!p.less(u, v)) continue;
            auto& lst = out.preds[static_cast<std::size_t>(u)];
            if (lst.empty()) continue;
            // Both lists are rank-sorted; drop the shared elements.
            diff.clear();
            std::set_difference(lst.begin(), lst.end(), top.begin(), top.end(), std::back_inserter(diff),
                                [&](int a, int b) { return p.rank(a) < p.rank(b); });
            lst.swap(diff);
        }
    }
    return out;
}

bool is_convex(const Correspondence& r) {
    const Poset& p = *r.order;
    const int n = static_cast<int>(p.size());
    std::vector<char> member(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int b = 0; b < n; ++b)
        for (int a : r.preds[static_cast<std::size_t>(b)])
            member[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = 1;
    auto in_r = [&](int a, int b) {
        return member[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] != 0;
    };
    for (int c = 0; c < n; ++c) {
        for (int a : r.preds[static_cast<std::size_t>(c)]) {
            if (!p.leq(a, c)) return false;
            for (int b = 0; b < n; ++b) {
                if (p.leq(a, b) && p.leq(b, c) && (!in_r(a, b) || !in_r(b, c))) return false;
            }
        }
    }
    return true;
}

TighteningTrace tighten_phases(const VertexWeightedDag& g, double gamma, double tol) {
    TighteningTrace t;
    t.relation = build_correspondence(g, gamma, tol);
    t.after_left = left_tighten(t.relation);
    t.after_right = right_tighten(t.after_left);
    return t;
}

std::vector<VertexPair> tight_pairs_of_relation(const Correspondence& bounded) {
    return right_tighten(left_tighten(bounded)).pairs();
}

std::vector<VertexPair> tight_pairs_via_tightening(const VertexWeightedDag& g, double gamma, double tol) {
    return tighten_phases(g, gamma, tol).after_right.pairs();
}

} // namespace tightpaths
