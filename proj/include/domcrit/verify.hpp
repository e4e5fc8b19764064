#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "domcrit/constructions.hpp"
#include "domcrit/criticality.hpp"
#include "domcrit/graph.hpp"
#include "domcrit/solve.hpp"

namespace domcrit {

struct Claim {
    std::string name;
    nlohmann::json claimed;
    nlohmann::json computed;
    std::string relation;  // "=", "<=", ">=", "note"
    std::string provenance;
    bool holds = false;
};

struct VerifyReport {
    std::string target;
    nlohmann::json params = nlohmann::json::object();
    std::vector<Claim> claims;
    bool pass = false;
    std::uint64_t seed = 0;
    double elapsed_ms = 0;
    std::uint64_t nodes_explored = 0;

    nlohmann::json to_json() const;
    /// One line per claim plus a verdict line.
    std::string to_text() const;
};

struct SweepConfig {
    int n_min = 4;
    int n_max = 9;
    int samples = 100;
    std::uint64_t seed = 0;
    double edge_probability = 0.35;
    std::vector<Variant> variants{kAllVariants.begin(), kAllVariants.end()};
};

/// Claims routed per family: R per Theorem 10, Q and J per their remarks,
/// corona per Theorem 1, B per the sharpness remark, recognized chains per
/// Corollary 13 / Theorems 14-16.
VerifyReport verify_family(const FamilySpec& spec);

/// If g is critical for the variant, asserts that variant's diameter bound
/// (total: floor((5k-7)/3) under the k >= 4 and leafless guards, plus the
/// weaker 2k-3; independent: 2(k-1); connected: k). Reports a note when the
/// graph is not critical or a guard exempts it.
VerifyReport verify_bound(Variant variant, const Graph& g, const std::string& target = "bound");

/// Fixed-seed Erdos-Renyi graphs conditioned on connectivity; every graph
/// found critical for a variant must satisfy that variant's diameter bound.
VerifyReport sweep(const SweepConfig& config);

/// Named theorem/remark checks for the CLI; unknown ids throw.
VerifyReport verify_theorem(const std::string& id,
                            const std::map<std::string, std::string>& params);

Graph random_connected_graph(int n, double edge_probability, std::mt19937_64& rng);

}  // namespace domcrit
