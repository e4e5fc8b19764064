// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// --skip-deep leaves out the two slow instances; --only-deep runs just those.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "domcrit/constructions.hpp"
#include "domcrit/criticality.hpp"
#include "domcrit/verify.hpp"

using namespace domcrit;

namespace {

struct Criterion {
    std::string id;
    std::string name;
    bool deep;
    std::function<bool(std::ostream&)> run;
};

bool expect(std::ostream& log, bool ok, const std::string& what) {
    if (!ok) log << "    FAILED: " << what << "\n";
    return ok;
}

bool check_family_critical(std::ostream& log, const Graph& g, Variant variant, int k,
                           const std::string& name) {
    CriticalityReport crit = check_critical(g, variant);
    bool ok = expect(log, crit.base_value == k,
                     name + ": value " + std::to_string(crit.base_value) + " != " +
                         std::to_string(k));
    ok &= expect(log, crit.verdict, name + ": not vertex critical");
    return ok;
}

bool check_diameter(std::ostream& log, const Graph& g, int expected, const std::string& name) {
    auto diam = diameter(g);
    return expect(log, diam && *diam == expected,
                  name + ": diameter " + (diam ? std::to_string(*diam) : "infinite") + " != " +
                      std::to_string(expected));
}

// 1. solve == brute_force_solve on 500 seeded random connected graphs
bool criterion_oracle(std::ostream& log) {
    std::mt19937_64 rng(1001);
    bool ok = true;
    for (int sample = 0; sample < 500; ++sample) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const double p = 0.15 + 0.12 * static_cast<double>(sample % 6);
        Graph g = random_connected_graph(n, p, rng);
        for (Variant variant : kAllVariants) {
            SolveResult exact = solve(g, variant);
            SolveResult oracle = brute_force_solve(g, variant);
            if (exact.value != oracle.value) {
                ok = expect(log, false,
                            "disagreement on sample " + std::to_string(sample) + " variant " +
                                std::string(variant_name(variant)));
            }
        }
    }
    return ok;
}

// 2. R(m) for m in {2,3}: 3-total-critical, diameter 3
bool criterion_r_family(std::ostream& log) {
    bool ok = true;
    for (int m : {2, 3}) {
        PointedGraph r = build_R(m);
        ok &= check_family_critical(log, r.graph, Variant::total, 3, "R(" + std::to_string(m) + ")");
        ok &= check_diameter(log, r.graph, 3, "R(" + std::to_string(m) + ")");
    }
    return ok;
}

// 3. Q(Hex4): gamma_t 4, diameter 5, not 4-critical
bool criterion_q_facts(std::ostream& log) {
    PointedGraph q = build_Q(build_H_example(4));
    CriticalityReport crit = check_critical(q.graph, Variant::total);
    bool ok = expect(log, crit.base_value == 4, "gamma_t(Q) != 4");
    ok &= expect(log, !crit.verdict, "Q must not be 4-critical");
    ok &= check_diameter(log, q.graph, 5, "Q");
    return ok;
}

// 4. J(t) for t in {2,3}: 4-total-critical, diameter 4
bool criterion_j_family(std::ostream& log) {
    bool ok = true;
    for (int t : {2, 3}) {
        PointedGraph j = build_J(t);
        ok &= check_family_critical(log, j.graph, Variant::total, 4, "J(" + std::to_string(t) + ")");
        ok &= check_diameter(log, j.graph, 4, "J(" + std::to_string(t) + ")");
    }
    return ok;
}

// 5. R(2) . J(2): 6-total-critical, diameter 7
bool criterion_thm14(std::ostream& log) {
    PointedGraph chain = build_chain({build_R(2), build_J(2)});
    bool ok = check_family_critical(log, chain.graph, Variant::total, 6, "R.J");
    ok &= check_diameter(log, chain.graph, 7, "R.J");
    return ok;
}

// 6. R(2) . R(2) . R(2): 7-total-critical, diameter 9 (deep)
bool criterion_thm15(std::ostream& log) {
    PointedGraph chain = build_chain({build_R(2), build_R(2), build_R(2)});
    bool ok = check_family_critical(log, chain.graph, Variant::total, 7, "R.R.R");
    ok &= check_diameter(log, chain.graph, 9, "R.R.R");
    return ok;
}

// 7. chain values gamma_t = 3n+3, minus Right 3n+2, minus N[Right] 3n+2
bool criterion_cor13(std::ostream& log, int n) {
    std::vector<PointedGraph> parts{build_R(2)};
    for (int i = 0; i < n; ++i) parts.push_back(build_Q(build_H_example(4)));
    PointedGraph chain = build_chain(parts);
    const Graph& g = chain.graph;
    auto whole = solve(g, Variant::total).value;
    auto minus_y = solve(delete_vertex(g, chain.right), Variant::total).value;
    auto minus_ny = solve(delete_closed_neighborhood(g, chain.right), Variant::total).value;
    bool ok = expect(log, whole == 3 * n + 3, "gamma_t(chain) != 3n+3");
    ok &= expect(log, minus_y == 3 * n + 2, "gamma_t(chain - y) != 3n+2");
    ok &= expect(log, minus_ny == 3 * n + 2, "gamma_t(chain - N[y]) != 3n+2");
    return ok;
}

// 8. coalescence characterization: C6*C6 fails both sides; three more pairs
//    confirm the biconditional (expected sides frozen from the oracle runs)
bool criterion_thm8(std::ostream& log) {
    Graph c6 = named_graph("C6");
    Graph r2 = build_R(2).graph;
    Graph j2 = build_J(2).graph;
    const int r_left = *r2.find_label("Left");
    const int r_right = *r2.find_label("Right");
    const int j_left = *j2.find_label("Left");

    struct Pair {
        const char* name;
        const Graph* g1;
        int x;
        const Graph* g2;
        int y;
        bool expect_lhs;
        bool expect_rhs;
    };
    const Pair pairs[] = {
        {"C6*C6", &c6, 0, &c6, 0, false, false},
        {"J2*J2", &j2, j_left, &j2, j_left, true, true},
        {"R2*R2", &r2, r_right, &r2, r_left, true, true},
        {"C6*J2", &c6, 0, &j2, j_left, false, false},
    };
    bool ok = true;
    for (const Pair& pair : pairs) {
        CoalescenceConditionReport rep =
            check_coalescence_condition(*pair.g1, pair.x, *pair.g2, pair.y);
        ok &= expect(log, rep.iff_holds, std::string(pair.name) + ": lhs <-> rhs violated");
        ok &= expect(log, rep.lhs == pair.expect_lhs,
                     std::string(pair.name) + ": lhs != expected");
        ok &= expect(log, rep.rhs == pair.expect_rhs,
                     std::string(pair.name) + ": rhs != expected");
    }
    return ok;
}

// 9. corona(H) is |V(H)|-total-critical for H in {C3, C4, C5, K4}
bool criterion_corona(std::ostream& log) {
    bool ok = true;
    for (const char* name : {"C3", "C4", "C5", "K4"}) {
        Graph h = named_graph(name);
        ok &= check_family_critical(log, corona(h), Variant::total, h.order(),
                                    "corona(" + std::string(name) + ")");
    }
    return ok;
}

// 10. B chains are k-independent-critical with diameter exactly 2(k-1)
bool criterion_b_chain(std::ostream& log) {
    bool ok = true;
    for (int k : {2, 3, 4}) {
        Graph b = build_B_chain(k, 2);
        std::string name = "B(" + std::to_string(k) + ",2)";
        ok &= check_family_critical(log, b, Variant::independent, k, name);
        ok &= check_diameter(log, b, 2 * (k - 1), name);
    }
    return ok;
}

// 11. bound sweep: 1000 seeded random connected graphs, zero violations
bool criterion_sweep(std::ostream& log) {
    SweepConfig config;
    config.n_min = 2;
    config.n_max = 9;
    config.samples = 1000;
    config.seed = 42;
    VerifyReport report = sweep(config);
    bool ok = expect(log, report.pass, "sweep reported bound violations");
    for (const Claim& claim : report.claims)
        if (!claim.holds) log << "    " << claim.name << ": " << claim.computed.dump() << "\n";
    return ok;
}

// 12. containing lemma on the criteria 2/4/5 graphs, drop lemma on criterion 10
bool criterion_lemmas(std::ostream& log) {
    bool ok = true;
    const std::vector<std::pair<std::string, Graph>> total_critical = {
        {"R(2)", build_R(2).graph},
        {"R(3)", build_R(3).graph},
        {"J(2)", build_J(2).graph},
        {"J(3)", build_J(3).graph},
        {"R.J", build_chain({build_R(2), build_J(2)}).graph},
    };
    for (const auto& [name, g] : total_critical)
        ok &= expect(log, check_containing_lemma(g).holds, name + ": containing lemma failed");
    for (int k : {2, 3, 4})
        ok &= expect(log, check_independent_lemma(build_B_chain(k, 2)).holds,
                     "B(" + std::to_string(k) + ",2): drop lemma failed");
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    bool skip_deep = false;
    bool only_deep = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--skip-deep") == 0) skip_deep = true;
        if (std::strcmp(argv[i], "--only-deep") == 0) only_deep = true;
    }

    const std::vector<Criterion> criteria = {
        {"1", "oracle equivalence, 500 random graphs x 4 variants", false, criterion_oracle},
        {"2", "R(m) is 3-total-critical with diameter 3", false, criterion_r_family},
        {"3", "Q facts: gamma_t 4, diameter 5, not critical", false, criterion_q_facts},
        {"4", "J(t) is 4-total-critical with diameter 4", false, criterion_j_family},
        {"5", "R.J is 6-total-critical with diameter 7", false, criterion_thm14},
        {"6", "R.R.R is 7-total-critical with diameter 9 (deep)", true, criterion_thm15},
        {"7a", "chain values at n = 0", false,
         [](std::ostream& log) { return criterion_cor13(log, 0); }},
        {"7b", "chain values at n = 1 (deep)", true,
         [](std::ostream& log) { return criterion_cor13(log, 1); }},
        {"8", "coalescence characterization regressions", false, criterion_thm8},
        {"9", "corona(H) is |V(H)|-total-critical", false, criterion_corona},
        {"10", "B(k,2) is k-independent-critical, diameter 2(k-1)", false, criterion_b_chain},
        {"11", "bound sweep over 1000 random graphs", false, criterion_sweep},
        {"12", "containing and drop lemmas on the verified corpus", false, criterion_lemmas},
    };

    int failures = 0;
    int executed = 0;
    for (const Criterion& criterion : criteria) {
        if ((skip_deep && criterion.deep) || (only_deep && !criterion.deep)) continue;
        ++executed;
        std::ostringstream log;
        const auto start = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = criterion.run(log);
        } catch (const std::exception& e) {
            log << "    EXCEPTION: " << e.what() << "\n";
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion.id << ": "
                  << criterion.name << " (" << seconds << " s)\n"
                  << log.str();
        if (!pass) ++failures;
    }
    if (executed == 0) {
        std::cout << "no criteria selected\n";
        return 1;
    }
    std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures)) << "\n";
    return failures == 0 ? 0 : 1;
}
