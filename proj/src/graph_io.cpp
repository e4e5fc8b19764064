#include "domcrit/graph_io.hpp"

#include <sstream>
#include <stdexcept>

namespace domcrit {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void strip_trailing_ws(std::string_view& text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int group = 0;
    int bits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    strip_trailing_ws(text);
    if (text.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    auto next6 = [&]() -> int {
        if (pos >= text.size()) throw std::invalid_argument("graph6: truncated input");
        char c = text[pos++];
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of range at position " +
                                        std::to_string(pos - 1));
        return c - 63;
    };

    long n;
    int first = next6();
    if (first < 63) {
        n = first;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw std::invalid_argument("graph6: order exceeds 128");
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | next6();
    }
    if (n > kMaxVertices) throw std::invalid_argument("graph6: order exceeds 128");

    GraphBuilder b(static_cast<int>(n));
    int group = 0;
    int bits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (bits == 0) {
                group = next6();
                bits = 6;
            }
            if ((group >> (bits - 1)) & 1) b.add_edge(row, col);
            --bits;
        }
    }
    if (pos != text.size()) throw std::invalid_argument("graph6: trailing bytes after bit stream");
    return b.build();
}

std::string edge_list_encode(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (v > u) out << u << ' ' << v << '\n';
    return out.str();
}

Graph edge_list_decode(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) throw std::invalid_argument("edge list: missing \"n m\" header");
    std::istringstream header(line);
    long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("edge list: malformed \"n m\" header");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        if (!next_line()) throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                                      " edges, got " + std::to_string(i));
        std::istringstream row(line);
        int u, v;
        if (!(row >> u >> v)) throw std::invalid_argument("edge list: malformed edge line: " + line);
        edges.emplace_back(u, v);
    }
    if (n > kMaxVertices) throw std::invalid_argument("edge list: order exceeds 128");
    return from_edge_list(static_cast<int>(n), edges);
}

}  // namespace domcrit
