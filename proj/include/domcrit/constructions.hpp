#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

/// H with one new pendant leaf attached to every vertex; order doubles.
Graph corona(const Graph& h);

/// Identify x in g1 with y in g2. g1 keeps its indices, the merged vertex
/// takes x's index, and g2's remaining vertices follow in ascending order.
Graph coalescence(const Graph& g1, int x, const Graph& g2, int y);

/// Index that vertex v of g2 receives inside coalescence(g1, x, g2, y).
int coalescence_second_index(int n1, int x, int y, int v);

/// Coalesce p1's Right with p2's Left; the result is pointed by p1's Left and
/// p2's Right. Throws when that pair is not diametrical in the composite.
PointedGraph bullet(const PointedGraph& p1, const PointedGraph& p2);

/// Fold of bullet over a non-empty list.
PointedGraph build_chain(const std::vector<PointedGraph>& parts);

/// Complete graph on t-2 vertices with a pendant path of two vertices.
Graph build_H_example(int t);  // t >= 4

/// x-copy of h joined to a y-copy of its complement (all cross edges except
/// corresponding pairs), plus Left over the x side and Right over the y side.
PointedGraph build_A(const Graph& h);  // |V(h)| >= 4

/// The paper's 13-vertex-per-m=2 pointed graph with diameter three built from
/// K_{m,m} and the complement of K_{m,m} minus one edge.
PointedGraph build_R(int m);  // m >= 2

/// Two copies of A(h) glued along their deleted Right/Left vertices with a
/// complete join between the exposed sides. Requires gamma_t(h) and
/// gamma_t(complement(h)) to both equal 2.
PointedGraph build_Q(const Graph& h);

/// Three 2t-vertex blocks (tK2, cocktail party, tK2) with index-respecting
/// joins, pointed by a vertex over each outer block.
PointedGraph build_J(int t);  // t >= 2

/// One representative of the diameter-extremal total-domination family for
/// each k >= 4, dispatching on k mod 3.
PointedGraph build_theorem16_family(int k, const Graph& h, int m, int t);

/// Path of k-1 cocktail-party blocks K_{2t} minus a perfect matching;
/// consecutive blocks share a formerly-matched (antipodal) pair of vertices.
Graph build_B_chain(int k, int t);  // k >= 2, t >= 2

/// Small named graphs for CLI arguments and seeds: "C6", "K4", "P5", "Hex4".
Graph named_graph(std::string_view name);

/// Parsed form of the CLI family syntax, e.g. "R:m=2", "B:k=3,t=2",
/// "chain:R:m=2,Q:h=Hex4,J:t=2", "thm16:k=7,m=2,t=2,h=Hex4".
struct FamilySpec {
    enum class Family { corona, A, R, Q, J, chain, theorem16, B_chain, H_example };

    Family family{};
    std::optional<int> m, t, n, k;
    std::optional<std::string> seed;  // named-graph reference for h
    std::vector<FamilySpec> parts;    // chain members

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
};

struct BuiltFamily {
    Graph graph;
    std::optional<int> left, right;  // set when the family is pointed
};

BuiltFamily build_family(const FamilySpec& spec);

}  // namespace domcrit
