#include "domcrit/constructions.hpp"

#include <charconv>
#include <stdexcept>

#include "domcrit/solve.hpp"

namespace domcrit {

Graph corona(const Graph& h) {
    const int m = h.order();
    GraphBuilder b(2 * m);
    for (int u = 0; u < m; ++u) {
        if (!h.label(u).empty()) b.set_label(u, h.label(u));
        b.set_label(m + u, "leaf_" + std::to_string(u));
        b.add_edge(u, m + u);
        for (int v : h.neighbors(u))
            if (v > u) b.add_edge(u, v);
    }
    return b.build();
}

int coalescence_second_index(int n1, int x, int y, int v) {
    if (v == y) return x;
    return n1 + (v < y ? v : v - 1);
}

Graph coalescence(const Graph& g1, int x, const Graph& g2, int y) {
    const int n1 = g1.order();
    const int n2 = g2.order();
    if (x < 0 || x >= n1 || y < 0 || y >= n2)
        throw std::invalid_argument("coalescence: vertex out of range");

    GraphBuilder b(n1 + n2 - 1);
    for (int u = 0; u < n1; ++u) {
        if (!g1.label(u).empty()) b.set_label(u, g1.label(u));
        for (int v : g1.neighbors(u))
            if (v > u) b.add_edge(u, v);
    }
    // merged vertex: g1's label for x wins, otherwise g2's label for y
    if (g1.label(x).empty() && !g2.label(y).empty()) b.set_label(x, g2.label(y));
    for (int u = 0; u < n2; ++u) {
        int mu = coalescence_second_index(n1, x, y, u);
        if (u != y && !g2.label(u).empty()) b.set_label(mu, g2.label(u));
        for (int v : g2.neighbors(u))
            if (v > u) b.add_edge(mu, coalescence_second_index(n1, x, y, v));
    }
    return b.build();
}

PointedGraph bullet(const PointedGraph& p1, const PointedGraph& p2) {
    Graph merged = coalescence(p1.graph, p1.right, p2.graph, p2.left);
    int left = p1.left;
    int right = coalescence_second_index(p1.graph.order(), p1.right, p2.left, p2.right);
    return PointedGraph(std::move(merged), left, right);
}

PointedGraph build_chain(const std::vector<PointedGraph>& parts) {
    if (parts.empty()) throw std::invalid_argument("build_chain: empty part list");
    PointedGraph acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = bullet(acc, parts[i]);
    return acc;
}

Graph build_H_example(int t) {
    if (t < 4) throw std::invalid_argument("build_H_example: t must be at least 4");
    GraphBuilder b(t);
    for (int u = 0; u < t - 2; ++u)
        for (int v = u + 1; v < t - 2; ++v) b.add_edge(u, v);
    b.add_edge(0, t - 2);      // x x1
    b.add_edge(t - 2, t - 1);  // x1 x2
    return b.build();
}

PointedGraph build_A(const Graph& h) {
    const int t = h.order();
    if (t < 4) throw std::invalid_argument("build_A: h must have at least four vertices");
    const int left = 2 * t;
    const int right = 2 * t + 1;
    GraphBuilder b(2 * t + 2);
    b.set_label(left, "Left");
    b.set_label(right, "Right");
    for (int i = 0; i < t; ++i) {
        b.set_label(i, "x" + std::to_string(i + 1));
        b.set_label(t + i, "y" + std::to_string(i + 1));
        b.add_edge(left, i);
        b.add_edge(right, t + i);
        for (int j = i + 1; j < t; ++j) {
            if (h.adjacent(i, j))
                b.add_edge(i, j);  // copy of h
            else
                b.add_edge(t + i, t + j);  // complement of h
        }
        for (int j = 0; j < t; ++j)
            if (j != i) b.add_edge(i, t + j);
    }
    return PointedGraph(b.build(), left, right);
}

PointedGraph build_R(int m) {
    if (m < 2) throw std::invalid_argument("build_R: m must be at least 2");
    const int two_m = 2 * m;
    // layout: x1..x_2m, y1..y_2m, z1, z2, z3, Left, Right
    auto x = [&](int i) { return i - 1; };          // 1-based
    auto y = [&](int i) { return two_m + i - 1; };  // 1-based
    const int z1 = 4 * m;
    const int z2 = 4 * m + 1;
    const int z3 = 4 * m + 2;
    const int left = 4 * m + 3;
    const int right = 4 * m + 4;

    GraphBuilder b(4 * m + 5);
    b.set_label(z1, "z1");
    b.set_label(z2, "z2");
    b.set_label(z3, "z3");
    b.set_label(left, "Left");
    b.set_label(right, "Right");
    for (int i = 1; i <= two_m; ++i) {
        b.set_label(x(i), "x" + std::to_string(i));
        b.set_label(y(i), "y" + std::to_string(i));
    }

    // K_{m,m} on the y side, bipartition odd/even
    for (int i = 1; i <= two_m; ++i)
        for (int j = i + 1; j <= two_m; ++j)
            if ((i + j) % 2 == 1) b.add_edge(y(i), y(j));
    // x side carries the complement of F = K_{m,m} - y1 y_2m
    for (int i = 1; i <= two_m; ++i)
        for (int j = i + 1; j <= two_m; ++j) {
            bool f_edge = ((i + j) % 2 == 1) && !(i == 1 && j == two_m);
            if (!f_edge) b.add_edge(x(i), x(j));
        }
    // join x_i to y_j except corresponding pairs
    for (int i = 1; i <= two_m; ++i)
        for (int j = 1; j <= two_m; ++j)
            if (i != j) b.add_edge(x(i), y(j));

    for (int i = 1; i <= two_m; ++i) {
        b.add_edge(left, x(i));
        b.add_edge(right, y(i));
        if (i <= two_m - 1) b.add_edge(z1, x(i));
        if (i >= 2) b.add_edge(z2, x(i));
        if (i >= 2 && i <= two_m - 1) {
            b.add_edge(z1, y(i));
            b.add_edge(z2, y(i));
        }
        b.add_edge(z3, y(i));
    }
    b.add_edge(z3, z1);
    b.add_edge(right, z2);
    return PointedGraph(b.build(), left, right);
}

PointedGraph build_Q(const Graph& h) {
    const int t = h.order();
    if (t < 4) throw std::invalid_argument("build_Q: h must have at least four vertices");
    auto gt = [&](const Graph& g) { return solve(g, Variant::total).value; };
    auto gh = gt(h);
    auto ghc = gt(complement(h));
    if (!(gh && *gh == 2 && ghc && *ghc == 2))
        throw std::invalid_argument(
            "build_Q: h must satisfy gamma_t(h) = gamma_t(complement(h)) = 2");

    // A1 minus its Right, then A2 minus its Left:
    //   A1 x: 0..t-1, A1 y: t..2t-1, A1 Left: 2t,
    //   A2 x: 2t+1..3t, A2 y: 3t+1..4t, A2 Right: 4t+1
    const int left = 2 * t;
    const int right = 4 * t + 1;
    GraphBuilder b(4 * t + 2);
    b.set_label(left, "Left");
    b.set_label(right, "Right");
    auto a1x = [&](int i) { return i; };
    auto a1y = [&](int i) { return t + i; };
    auto a2x = [&](int i) { return 2 * t + 1 + i; };
    auto a2y = [&](int i) { return 3 * t + 1 + i; };
    for (int i = 0; i < t; ++i) {
        b.set_label(a1x(i), "a1_x" + std::to_string(i + 1));
        b.set_label(a1y(i), "a1_y" + std::to_string(i + 1));
        b.set_label(a2x(i), "a2_x" + std::to_string(i + 1));
        b.set_label(a2y(i), "a2_y" + std::to_string(i + 1));
        b.add_edge(left, a1x(i));
        b.add_edge(right, a2y(i));
        for (int j = i + 1; j < t; ++j) {
            if (h.adjacent(i, j)) {
                b.add_edge(a1x(i), a1x(j));
                b.add_edge(a2x(i), a2x(j));
            } else {
                b.add_edge(a1y(i), a1y(j));
                b.add_edge(a2y(i), a2y(j));
            }
        }
        for (int j = 0; j < t; ++j) {
            if (j != i) {
                b.add_edge(a1x(i), a1y(j));
                b.add_edge(a2x(i), a2y(j));
            }
            // neighbors of A1's deleted Right joined to neighbors of A2's deleted Left
            b.add_edge(a1y(i), a2x(j));
        }
    }
    return PointedGraph(b.build(), left, right);
}

PointedGraph build_J(int t) {
    if (t < 2) throw std::invalid_argument("build_J: t must be at least 2");
    const int two_t = 2 * t;
    auto a = [&](int i) { return i - 1; };              // J1, 1-based
    auto bb = [&](int i) { return two_t + i - 1; };     // J2
    auto c = [&](int i) { return 2 * two_t + i - 1; };  // J3
    const int left = 3 * two_t;
    const int right = 3 * two_t + 1;
    auto partner = [](int i) { return (i % 2 == 1) ? i + 1 : i - 1; };

    GraphBuilder b(6 * t + 2);
    b.set_label(left, "Left");
    b.set_label(right, "Right");
    for (int i = 1; i <= two_t; ++i) {
        b.set_label(a(i), "a" + std::to_string(i));
        b.set_label(bb(i), "b" + std::to_string(i));
        b.set_label(c(i), "c" + std::to_string(i));
        b.add_edge(left, a(i));
        b.add_edge(right, c(i));
        if (i % 2 == 1) {
            b.add_edge(a(i), a(i + 1));  // tK2 matchings
            b.add_edge(c(i), c(i + 1));
        }
        for (int j = i + 1; j <= two_t; ++j)
            if (j != partner(i)) b.add_edge(bb(i), bb(j));  // complement of tK2
        for (int j = 1; j <= two_t; ++j)
            if (j != i) {
                b.add_edge(a(i), bb(j));
                b.add_edge(bb(i), c(j));
            }
    }
    return PointedGraph(b.build(), left, right);
}

PointedGraph build_theorem16_family(int k, const Graph& h, int m, int t) {
    if (k < 4) throw std::invalid_argument("build_theorem16_family: k must be at least 4");
    if (k == 4) return build_J(t);
    std::vector<PointedGraph> parts;
    switch (k % 3) {
        case 2: {  // k = 3n + 5
            const int n = (k - 5) / 3;
            parts.push_back(build_A(h));
            for (int i = 0; i < n; ++i) parts.push_back(build_Q(h));
            parts.push_back(build_A(h));
            break;
        }
        case 0: {  // k = 3n + 6
            const int n = (k - 6) / 3;
            parts.push_back(build_R(m));
            for (int i = 0; i < n; ++i) parts.push_back(build_Q(h));
            parts.push_back(build_J(t));
            break;
        }
        default: {  // k = 3n + 7
            const int n = (k - 7) / 3;
            parts.push_back(build_R(m));
            for (int i = 0; i < n; ++i) parts.push_back(build_Q(h));
            parts.push_back(build_R(m));
            parts.push_back(build_R(m));
            break;
        }
    }
    return build_chain(parts);
}

Graph build_B_chain(int k, int t) {
    if (k < 2 || t < 2) throw std::invalid_argument("build_B_chain: requires k >= 2 and t >= 2");
    const int block = 2 * t;
    const int n = (k - 1) * (block - 1) + 1;
    if (n > kMaxVertices) throw std::invalid_argument("build_B_chain: too many vertices");

    // Block b's local vertex 0 is the cut vertex shared with block b-1; its
    // formerly matched partner (local 1) is shared with block b+1. Matching
    // pairs are (2i, 2i+1) locally.
    auto global = [&](int b, int local) {
        if (b == 0) return local;
        if (local == 0) return b == 1 ? 1 : block + (b - 2) * (block - 1);
        return block + (b - 1) * (block - 1) + (local - 1);
    };

    GraphBuilder gb(n);
    for (int b = 0; b < k - 1; ++b)
        for (int i = 0; i < block; ++i)
            for (int j = i + 1; j < block; ++j)
                if (j != (i ^ 1)) gb.add_edge(global(b, i), global(b, j));
    return gb.build();
}

Graph named_graph(std::string_view name) {
    auto parse_int = [&](std::string_view digits) -> std::optional<int> {
        int value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
        return value;
    };
    if (name.size() >= 4 && name.substr(0, 3) == "Hex") {
        if (auto t = parse_int(name.substr(3))) return build_H_example(*t);
    } else if (!name.empty()) {
        auto count = parse_int(name.substr(1));
        if (count && *count >= 1 && *count <= kMaxVertices) {
            const int n = *count;
            GraphBuilder b(n);
            switch (name[0]) {
                case 'K':
                    for (int u = 0; u < n; ++u)
                        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
                    return b.build();
                case 'P':
                    for (int u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
                    return b.build();
                case 'C':
                    if (n < 3) break;
                    for (int u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
                    return b.build();
                default: break;
            }
        }
    }
    throw std::invalid_argument("unknown graph name: " + std::string(name) +
                                " (expected C<n>, P<n>, K<n> or Hex<t>)");
}

namespace {

using Family = FamilySpec::Family;

struct FamilyName {
    std::string_view text;
    Family family;
};

constexpr FamilyName kFamilyNames[] = {
    {"corona", Family::corona}, {"A", Family::A},
    {"R", Family::R},           {"Q", Family::Q},
    {"J", Family::J},           {"chain", Family::chain},
    {"thm16", Family::theorem16}, {"B", Family::B_chain},
    {"Hex", Family::H_example},
};

std::string_view family_text(Family f) {
    for (const auto& entry : kFamilyNames)
        if (entry.family == f) return entry.text;
    return "?";
}

FamilySpec parse_single(std::string_view text) {
    auto colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    FamilySpec spec;
    bool known = false;
    for (const auto& entry : kFamilyNames)
        if (entry.text == name) {
            spec.family = entry.family;
            known = true;
            break;
        }
    if (!known || spec.family == Family::chain)
        throw std::invalid_argument("family spec: unknown family name: " + std::string(name));

    std::string_view rest = colon == std::string_view::npos ? std::string_view{}
                                                            : text.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw std::invalid_argument("family spec: expected key=value, got: " +
                                        std::string(item));
        std::string_view key = item.substr(0, eq);
        std::string_view value = item.substr(eq + 1);
        if (key == "h") {
            spec.seed = std::string(value);
            continue;
        }
        int parsed = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
        if (ec != std::errc{} || ptr != value.data() + value.size())
            throw std::invalid_argument("family spec: bad integer for " + std::string(key) + ": " +
                                        std::string(value));
        if (key == "m")
            spec.m = parsed;
        else if (key == "t")
            spec.t = parsed;
        else if (key == "n")
            spec.n = parsed;
        else if (key == "k")
            spec.k = parsed;
        else
            throw std::invalid_argument("family spec: unknown parameter: " + std::string(key));
    }
    return spec;
}

int require(const std::optional<int>& value, const char* what, Family family) {
    if (!value)
        throw std::invalid_argument("family spec: " + std::string(family_text(family)) +
                                    " requires parameter " + what);
    return *value;
}

Graph seed_graph(const FamilySpec& spec) {
    if (!spec.seed)
        throw std::invalid_argument("family spec: " + std::string(family_text(spec.family)) +
                                    " requires parameter h");
    return named_graph(*spec.seed);
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    if (text.substr(0, 6) == "chain:") {
        FamilySpec spec;
        spec.family = Family::chain;
        std::string_view rest = text.substr(6);
        // every chain part carries exactly one key=value, so commas only
        // separate parts
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string_view part = rest.substr(0, comma);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            spec.parts.push_back(parse_single(part));
        }
        if (spec.parts.empty()) throw std::invalid_argument("family spec: empty chain");
        return spec;
    }
    return parse_single(text);
}

std::string FamilySpec::to_string() const {
    if (family == Family::chain) {
        std::string out = "chain:";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i > 0) out += ',';
            out += parts[i].to_string();
        }
        return out;
    }
    std::string out{family_text(family)};
    char sep = ':';
    auto push = [&](const char* key, const std::optional<int>& value) {
        if (!value) return;
        out += sep;
        out += key;
        out += '=';
        out += std::to_string(*value);
        sep = ',';
    };
    push("k", k);
    push("m", m);
    push("n", n);
    push("t", t);
    if (seed) {
        out += sep;
        out += "h=";
        out += *seed;
    }
    return out;
}

BuiltFamily build_family(const FamilySpec& spec) {
    auto pointed = [](PointedGraph p) {
        return BuiltFamily{std::move(p.graph), p.left, p.right};
    };
    switch (spec.family) {
        case Family::corona: return {corona(seed_graph(spec)), std::nullopt, std::nullopt};
        case Family::A: return pointed(build_A(seed_graph(spec)));
        case Family::R: return pointed(build_R(require(spec.m, "m", spec.family)));
        case Family::Q: return pointed(build_Q(seed_graph(spec)));
        case Family::J: return pointed(build_J(require(spec.t, "t", spec.family)));
        case Family::H_example:
            return {build_H_example(require(spec.t, "t", spec.family)), std::nullopt, std::nullopt};
        case Family::B_chain:
            return {build_B_chain(require(spec.k, "k", spec.family),
                                  require(spec.t, "t", spec.family)),
                    std::nullopt, std::nullopt};
        case Family::theorem16: {
            Graph h = spec.seed ? named_graph(*spec.seed) : build_H_example(4);
            return pointed(build_theorem16_family(require(spec.k, "k", spec.family), h,
                                                  spec.m.value_or(2), spec.t.value_or(2)));
        }
        case Family::chain: {
            std::vector<PointedGraph> parts;
            parts.reserve(spec.parts.size());
            for (const FamilySpec& part : spec.parts) {
                BuiltFamily built = build_family(part);
                if (!built.left || !built.right)
                    throw std::invalid_argument("family spec: chain parts must be pointed");
                parts.emplace_back(std::move(built.graph), *built.left, *built.right);
            }
            return pointed(build_chain(parts));
        }
    }
    throw std::invalid_argument("family spec: unhandled family");
}

}  // namespace domcrit
