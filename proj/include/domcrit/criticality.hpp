#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domcrit/graph.hpp"
#include "domcrit/solve.hpp"

namespace domcrit {

/// Verdict of a vertex-criticality check: true iff deleting any tested vertex
/// strictly decreases the domination value (an infeasible deletion counts as
/// a failure, never as a decrease).
struct CriticalityReport {
    Variant variant{};
    int base_value = 0;
    VertexSet tested_vertices;
    std::vector<std::optional<int>> per_vertex;  // indexed by vertex; set for tested ones
    bool verdict = false;
    VertexSet failing_witnesses;
    std::uint64_t nodes_explored = 0;  // aggregate over all solves
};

/// Tested vertices are all of V, except for the total variant where the
/// vertices adjacent to a degree-one vertex are exempt. Throws on disconnected
/// input, on n < 2, on a non-2-connected input for the connected variant, and
/// on a total-variant input whose tested set is empty.
CriticalityReport check_critical(const Graph& g, Variant variant);

/// For every vertex w of a total-domination vertex critical graph without
/// leaves: some minimum total dominating set contains w, and deleting w drops
/// the total domination number by exactly one.
struct ContainingLemmaReport {
    bool holds = false;
    int base_value = 0;
    std::vector<std::optional<VertexSet>> witnesses;  // per vertex: minimum set containing it
    VertexSet failing;
};
ContainingLemmaReport check_containing_lemma(const Graph& g);

/// For every vertex v of an independent-domination vertex critical graph,
/// i(G - v) = i(G) - 1.
struct IndependentLemmaReport {
    bool holds = false;
    int base_value = 0;
    VertexSet failing;
};
IndependentLemmaReport check_independent_lemma(const Graph& g);

/// Both sides of the coalescence characterization: lhs = the coalescence is
/// (k1 + k2 - 1)-total-domination vertex critical; rhs = both closed-
/// neighborhood deletions keep a total domination number of at least k - 1
/// (an infeasible deletion counts as +infinity, so its inequality holds).
struct CoalescenceConditionReport {
    int k1 = 0;
    int k2 = 0;
    std::optional<int> coalescence_value;   // gamma_t of the coalescence
    std::optional<int> g1_neighborhood_deleted;  // gamma_t(G1 - N[x])
    std::optional<int> g2_neighborhood_deleted;  // gamma_t(G2 - N[y])
    bool coalescence_critical = false;
    bool lhs = false;
    bool rhs = false;
    bool iff_holds = false;
};
CoalescenceConditionReport check_coalescence_condition(const Graph& g1, int x, const Graph& g2,
                                                       int y);

/// Worker count for per-vertex deleted-graph solves: DOMCRIT_THREADS when set,
/// otherwise the available hardware parallelism.
int worker_count();

}  // namespace domcrit
