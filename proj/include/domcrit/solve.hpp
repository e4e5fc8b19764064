#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "domcrit/graph.hpp"

namespace domcrit {

enum class Variant { plain, total, independent, connected };

inline constexpr std::array<Variant, 4> kAllVariants = {Variant::plain, Variant::total,
                                                        Variant::independent, Variant::connected};

std::string_view variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

struct SolveStats {
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
};

/// value/certificate absent means the variant has no valid set at all
/// (total: isolated vertex present; connected: disconnected or empty graph).
struct SolveResult {
    Variant variant{};
    std::optional<int> value;
    std::optional<VertexSet> certificate;
    SolveStats stats;

    bool feasible() const { return value.has_value(); }
};

/// Exact definition check for each variant. Total domination requires every
/// vertex, including members of s, to have a neighbor in s. The empty set is
/// never a connected dominating set.
bool is_valid_set(const Graph& g, const VertexSet& s, Variant variant);

/// Exact minimum via branch-and-bound on the least-coverable uncovered vertex.
/// Deterministic: candidate order is degree descending, ties by vertex index.
SolveResult solve(const Graph& g, Variant variant);

/// Minimum over sets containing all of `forced`. For the connected variant the
/// forced set must induce a connected subgraph.
SolveResult solve_forced(const Graph& g, Variant variant, const VertexSet& forced);

/// Subset enumeration in increasing cardinality; oracle for solve. n <= 24.
SolveResult brute_force_solve(const Graph& g, Variant variant);

/// Size of a greedily built valid set (max-new-coverage rule; the connected
/// variant grows from a max-degree vertex). nullopt iff solve is infeasible.
std::optional<int> greedy_upper_bound(const Graph& g, Variant variant);

}  // namespace domcrit
