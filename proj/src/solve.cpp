#include "domcrit/solve.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace domcrit {

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::plain: return "plain";
        case Variant::total: return "total";
        case Variant::independent: return "independent";
        case Variant::connected: return "connected";
    }
    return "?";
}

std::optional<Variant> variant_from_name(std::string_view name) {
    for (Variant v : kAllVariants)
        if (variant_name(v) == name) return v;
    return std::nullopt;
}

bool is_valid_set(const Graph& g, const VertexSet& s, Variant variant) {
    if (!g.vertices().contains(s)) throw std::invalid_argument("is_valid_set: set not within graph");
    const VertexSet all = g.vertices();
    switch (variant) {
        case Variant::plain: {
            VertexSet covered = s;
            for (int v : s) covered |= g.neighbors(v);
            return covered.contains(all);
        }
        case Variant::total: {
            VertexSet covered;
            for (int v : s) covered |= g.neighbors(v);
            return covered.contains(all);
        }
        case Variant::independent: {
            VertexSet covered = s;
            for (int v : s) {
                if (g.neighbors(v).intersects(s)) return false;
                covered |= g.neighbors(v);
            }
            return covered.contains(all);
        }
        case Variant::connected: {
            if (s.empty()) return false;
            VertexSet covered;
            for (int v : s) covered |= g.closed_neighborhood(v);
            if (!covered.contains(all)) return false;
            // connectivity of the induced subgraph, by BFS restricted to s
            VertexSet seen = VertexSet::single(s.lowest());
            VertexSet frontier = seen;
            while (!frontier.empty()) {
                VertexSet next;
                for (int v : frontier) next |= g.neighbors(v) & s;
                next -= seen;
                seen |= next;
                frontier = next;
            }
            return seen == s;
        }
    }
    return false;
}

namespace {

// Shared search state. cover_[c] is what adding c newly dominates: N[c] for
// plain/independent/connected, N(c) for total; for those three variants it
// coincides with the set of vertices able to dominate c, which the branching
// rule also needs.
struct Searcher {
    const Graph& g;
    Variant variant;
    int n;
    VertexSet all;
    std::vector<VertexSet> cover_;
    std::vector<int> order_;  // degree descending, ties by index

    int best_size = 0;
    bool has_best = false;
    VertexSet best_set;
    std::uint64_t nodes = 0;

    Searcher(const Graph& graph, Variant var) : g(graph), variant(var), n(graph.order()) {
        all = g.vertices();
        cover_.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            cover_.push_back(variant == Variant::total ? g.neighbors(v)
                                                       : g.closed_neighborhood(v));
        order_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order_[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    int limit() const { return has_best ? best_size : n + 1; }

    void record(const VertexSet& chosen, int size) {
        if (!has_best || size < best_size) {
            has_best = true;
            best_size = size;
            best_set = chosen;
        }
    }

    // Plain / total / independent. `excluded` carries both branch exclusions
    // and, for the independent variant, neighborhoods of chosen vertices.
    void search(const VertexSet& chosen, int size, const VertexSet& covered,
                const VertexSet& excluded) {
        ++nodes;
        const VertexSet uncovered = all - covered;
        if (uncovered.empty()) {
            record(chosen, size);
            return;
        }
        if (size + 1 >= limit()) return;

        const VertexSet allowed = all - excluded;
        int max_cover = 0;
        for (int c : allowed)
            max_cover = std::max(max_cover, (cover_[static_cast<std::size_t>(c)] & uncovered).count());
        if (max_cover == 0) return;
        const int lower = size + (uncovered.count() + max_cover - 1) / max_cover;
        if (lower >= limit()) return;

        int branch_vertex = -1;
        int branch_width = n + 1;
        for (int v : uncovered) {
            int width = (cover_[static_cast<std::size_t>(v)] & allowed).count();
            if (width == 0) return;  // v can no longer be dominated
            if (width < branch_width) {
                branch_width = width;
                branch_vertex = v;
            }
        }

        const VertexSet candidates = cover_[static_cast<std::size_t>(branch_vertex)] & allowed;
        VertexSet banned = excluded;
        for (int c : order_) {
            if (!candidates.test(c)) continue;
            VertexSet next_chosen = chosen;
            next_chosen.set(c);
            VertexSet next_excluded = banned;
            next_excluded.set(c);
            if (variant == Variant::independent) next_excluded |= g.neighbors(c);
            search(next_chosen, size + 1, covered | cover_[static_cast<std::size_t>(c)],
                   next_excluded);
            banned.set(c);  // later branches may not revisit c
        }
    }

    // Connected variant: grow connected partial sets; after the first choice,
    // candidates are frontier vertices only. covered is the union of closed
    // neighborhoods of chosen, so frontier = covered - chosen.
    void search_connected(const VertexSet& chosen, int size, const VertexSet& covered,
                          const VertexSet& excluded) {
        ++nodes;
        if (!chosen.empty() && covered.contains(all)) {
            record(chosen, size);
            return;
        }
        if (size + 1 >= limit()) return;

        const VertexSet uncovered = all - covered;
        const VertexSet allowed = all - excluded;
        int max_cover = 0;
        for (int c : allowed)
            max_cover = std::max(max_cover, (cover_[static_cast<std::size_t>(c)] & uncovered).count());
        if (max_cover == 0) return;
        const int lower = size + (uncovered.count() + max_cover - 1) / max_cover;
        if (lower >= limit()) return;
        for (int v : uncovered)
            if ((cover_[static_cast<std::size_t>(v)] & allowed).empty()) return;

        const VertexSet candidates = chosen.empty() ? allowed : (covered - chosen) & allowed;
        VertexSet banned = excluded;
        for (int c : order_) {
            if (!candidates.test(c)) continue;
            VertexSet next_chosen = chosen;
            next_chosen.set(c);
            VertexSet next_excluded = banned;
            next_excluded.set(c);
            search_connected(next_chosen, size + 1, covered | cover_[static_cast<std::size_t>(c)],
                             next_excluded);
            banned.set(c);
        }
    }
};

std::optional<VertexSet> greedy_set(const Graph& g, Variant variant) {
    const int n = g.order();
    const VertexSet all = g.vertices();
    if (n == 0) {
        if (variant == Variant::connected) return std::nullopt;
        return VertexSet{};
    }
    StructureFlags flags = structure_flags(g);
    if (variant == Variant::total && flags.has_isolated) return std::nullopt;
    if (variant == Variant::connected && !flags.connected) return std::nullopt;

    auto cover_of = [&](int c) {
        return variant == Variant::total ? g.neighbors(c) : g.closed_neighborhood(c);
    };
    // tie order: new coverage desc, then degree desc, then index asc
    auto better = [&](int a, int cov_a, int b, int cov_b) {
        if (cov_a != cov_b) return cov_a > cov_b;
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    };

    VertexSet chosen, covered, banned;
    if (variant == Variant::connected) {
        int start = 0;
        for (int v = 1; v < n; ++v)
            if (g.degree(v) > g.degree(start)) start = v;
        chosen.set(start);
        covered = g.closed_neighborhood(start);
    }
    while (!covered.contains(all)) {
        const VertexSet uncovered = all - covered;
        VertexSet candidates;
        if (variant == Variant::connected)
            candidates = (covered - chosen);
        else
            candidates = all - banned - chosen;
        int pick = -1, pick_cov = -1;
        for (int c : candidates) {
            int cov = (cover_of(c) & uncovered).count();
            if (pick == -1 || better(c, cov, pick, pick_cov)) {
                pick = c;
                pick_cov = cov;
            }
        }
        if (pick == -1) return std::nullopt;  // cannot happen for feasible inputs
        chosen.set(pick);
        covered |= cover_of(pick);
        if (variant == Variant::independent) banned |= g.neighbors(pick);
    }
    return chosen;
}

}  // namespace

std::optional<int> greedy_upper_bound(const Graph& g, Variant variant) {
    auto set = greedy_set(g, variant);
    if (!set) return std::nullopt;
    return set->count();
}

SolveResult solve_forced(const Graph& g, Variant variant, const VertexSet& forced) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveResult result;
    result.variant = variant;
    auto finish = [&]() -> SolveResult& {
        result.stats.elapsed = std::chrono::steady_clock::now() - t0;
        return result;
    };
    if (!g.vertices().contains(forced))
        throw std::invalid_argument("solve_forced: forced set not within graph");

    const int n = g.order();
    if (n == 0) {
        if (variant != Variant::connected) {
            result.value = 0;
            result.certificate = VertexSet{};
        }
        return finish();
    }
    StructureFlags flags = structure_flags(g);
    if (variant == Variant::total && flags.has_isolated) return finish();
    if (variant == Variant::connected && !flags.connected) return finish();

    Searcher searcher(g, variant);

    // Incumbent: greedy set when unconstrained, otherwise V when V is valid.
    if (forced.empty()) {
        if (auto seed = greedy_set(g, variant)) searcher.record(*seed, seed->count());
    } else if (is_valid_set(g, g.vertices(), variant)) {
        searcher.record(g.vertices(), n);
    }

    VertexSet covered, excluded = forced;
    int size = forced.count();
    for (int v : forced) covered |= searcher.cover_[static_cast<std::size_t>(v)];
    if (variant == Variant::independent) {
        for (int v : forced) {
            if (g.neighbors(v).intersects(forced)) {
                // forced set is not independent: no superset qualifies
                return finish();
            }
            excluded |= g.neighbors(v);
        }
    }
    if (variant == Variant::connected) {
        if (!forced.empty() && !is_connected(induced_subgraph(g, forced)))
            throw std::invalid_argument("solve_forced: forced set must induce a connected subgraph");
        searcher.search_connected(forced, size, covered, excluded);
    } else {
        searcher.search(forced, size, covered, excluded);
    }

    result.stats.nodes_explored = searcher.nodes;
    if (searcher.has_best) {
        result.value = searcher.best_size;
        result.certificate = searcher.best_set;
    }
    return finish();
}

SolveResult solve(const Graph& g, Variant variant) { return solve_forced(g, variant, VertexSet{}); }

SolveResult brute_force_solve(const Graph& g, Variant variant) {
    const int n = g.order();
    if (n > 24) throw std::invalid_argument("brute_force_solve: n > 24");
    const auto t0 = std::chrono::steady_clock::now();
    SolveResult result;
    result.variant = variant;

    auto to_set = [](std::uint32_t mask) {
        VertexSet s;
        for (int v = 0; mask; ++v, mask >>= 1)
            if (mask & 1) s.set(v);
        return s;
    };

    for (int k = 0; k <= n && !result.value; ++k) {
        if (k == 0) {
            ++result.stats.nodes_explored;
            if (is_valid_set(g, VertexSet{}, variant)) {
                result.value = 0;
                result.certificate = VertexSet{};
            }
            continue;
        }
        const std::uint64_t top = std::uint64_t{1} << n;
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        while (mask < top) {
            ++result.stats.nodes_explored;
            VertexSet s = to_set(static_cast<std::uint32_t>(mask));
            if (is_valid_set(g, s, variant)) {
                result.value = k;
                result.certificate = s;
                break;
            }
            // Gosper's hack: next mask with k bits
            std::uint64_t c = mask & (~mask + 1);
            std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    result.stats.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

}  // namespace domcrit
