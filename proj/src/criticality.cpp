#include "domcrit/criticality.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "domcrit/constructions.hpp"

namespace domcrit {

int worker_count() {
    if (const char* env = std::getenv("DOMCRIT_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Runs fn(v) for each tested vertex, in parallel when the instances are big
// enough to pay for the threads. Result slots keep the report deterministic.
template <typename Fn>
void for_each_tested(const VertexSet& tested, int order, Fn&& fn) {
    std::vector<int> vertices;
    for (int v : tested) vertices.push_back(v);
    const int workers =
        std::min<int>(worker_count(), static_cast<int>(vertices.size()));
    if (workers <= 1 || order < 16) {
        for (int v : vertices) fn(v);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < vertices.size(); i = next.fetch_add(1))
                fn(vertices[i]);
        });
    for (std::thread& th : pool) th.join();
}

}  // namespace

CriticalityReport check_critical(const Graph& g, Variant variant) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("check_critical: graph must have at least two vertices");
    StructureFlags flags = structure_flags(g);
    if (!flags.connected) throw std::invalid_argument("check_critical: graph must be connected");
    if (variant == Variant::connected && !flags.two_connected)
        throw std::invalid_argument(
            "check_critical: connected-domination criticality requires a 2-connected graph");

    CriticalityReport report;
    report.variant = variant;
    if (variant == Variant::total) {
        for (int v = 0; v < n; ++v)
            if (!g.neighbors(v).intersects(flags.leaves)) report.tested_vertices.set(v);
        if (report.tested_vertices.empty())
            throw std::invalid_argument(
                "check_critical: every vertex is adjacent to a leaf; nothing to test");
    } else {
        report.tested_vertices = g.vertices();
    }

    SolveResult base = solve(g, variant);
    // connected input: plain/independent always feasible, total feasible (no
    // isolated vertex once n >= 2), connected feasible
    report.base_value = *base.value;
    report.per_vertex.assign(static_cast<std::size_t>(n), std::nullopt);

    std::vector<std::uint64_t> nodes(static_cast<std::size_t>(n), 0);
    for_each_tested(report.tested_vertices, n, [&](int v) {
        SolveResult r = solve(delete_vertex(g, v), variant);
        report.per_vertex[static_cast<std::size_t>(v)] = r.value;
        nodes[static_cast<std::size_t>(v)] = r.stats.nodes_explored;
    });

    report.nodes_explored = base.stats.nodes_explored;
    for (std::uint64_t c : nodes) report.nodes_explored += c;
    for (int v : report.tested_vertices) {
        const auto& val = report.per_vertex[static_cast<std::size_t>(v)];
        if (!val || *val >= report.base_value) report.failing_witnesses.set(v);
    }
    report.verdict = report.failing_witnesses.empty();
    return report;
}

ContainingLemmaReport check_containing_lemma(const Graph& g) {
    StructureFlags flags = structure_flags(g);
    if (!flags.leaves.empty())
        throw std::invalid_argument("check_containing_lemma: graph has leaf vertices");
    CriticalityReport crit = check_critical(g, Variant::total);
    if (!crit.verdict)
        throw std::invalid_argument(
            "check_containing_lemma: graph is not total-domination vertex critical");

    ContainingLemmaReport report;
    report.base_value = crit.base_value;
    report.witnesses.assign(static_cast<std::size_t>(g.order()), std::nullopt);
    std::vector<char> ok(static_cast<std::size_t>(g.order()), 0);
    for_each_tested(g.vertices(), g.order(), [&](int w) {
        SolveResult constrained = solve_forced(g, Variant::total, VertexSet::single(w));
        bool contains_ok = constrained.value && *constrained.value == crit.base_value;
        if (contains_ok) report.witnesses[static_cast<std::size_t>(w)] = constrained.certificate;
        const auto& deleted = crit.per_vertex[static_cast<std::size_t>(w)];
        bool drop_ok = deleted && *deleted == crit.base_value - 1;
        ok[static_cast<std::size_t>(w)] = contains_ok && drop_ok;
    });
    for (int w = 0; w < g.order(); ++w)
        if (!ok[static_cast<std::size_t>(w)]) report.failing.set(w);
    report.holds = report.failing.empty();
    return report;
}

IndependentLemmaReport check_independent_lemma(const Graph& g) {
    CriticalityReport crit = check_critical(g, Variant::independent);
    if (!crit.verdict)
        throw std::invalid_argument(
            "check_independent_lemma: graph is not independent-domination vertex critical");
    IndependentLemmaReport report;
    report.base_value = crit.base_value;
    for (int v = 0; v < g.order(); ++v) {
        const auto& deleted = crit.per_vertex[static_cast<std::size_t>(v)];
        if (!(deleted && *deleted == crit.base_value - 1)) report.failing.set(v);
    }
    report.holds = report.failing.empty();
    return report;
}

CoalescenceConditionReport check_coalescence_condition(const Graph& g1, int x, const Graph& g2,
                                                       int y) {
    auto verify_input = [](const Graph& g, const char* which) {
        if (!structure_flags(g).leaves.empty())
            throw std::invalid_argument(std::string("check_coalescence_condition: ") + which +
                                        " has leaf vertices");
        CriticalityReport crit = check_critical(g, Variant::total);
        if (!crit.verdict)
            throw std::invalid_argument(std::string("check_coalescence_condition: ") + which +
                                        " is not total-domination vertex critical");
        return crit.base_value;
    };

    CoalescenceConditionReport report;
    report.k1 = verify_input(g1, "first graph");
    report.k2 = verify_input(g2, "second graph");
    if (x < 0 || x >= g1.order() || y < 0 || y >= g2.order())
        throw std::invalid_argument("check_coalescence_condition: vertex out of range");

    Graph merged = coalescence(g1, x, g2, y);
    CriticalityReport crit = check_critical(merged, Variant::total);
    report.coalescence_value = crit.base_value;
    report.coalescence_critical = crit.verdict;
    report.lhs = crit.verdict && crit.base_value == report.k1 + report.k2 - 1;

    report.g1_neighborhood_deleted = solve(delete_closed_neighborhood(g1, x), Variant::total).value;
    report.g2_neighborhood_deleted = solve(delete_closed_neighborhood(g2, y), Variant::total).value;
    auto at_least = [](const std::optional<int>& value, int bound) {
        return !value || *value >= bound;  // infeasible counts as +infinity
    };
    report.rhs = at_least(report.g2_neighborhood_deleted, report.k2 - 1) &&
                 at_least(report.g1_neighborhood_deleted, report.k1 - 1);
    report.iff_holds = report.lhs == report.rhs;
    return report;
}

}  // namespace domcrit
