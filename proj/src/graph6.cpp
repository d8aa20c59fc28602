#include "domviz/graph6.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace domviz {

namespace {

constexpr int kBias = 63;

int value_of(char c, std::size_t pos) {
    const int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63)
        throw std::invalid_argument("graph6: character at position " + std::to_string(pos) +
                                    " outside [63,126]");
    return v;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    long long n;
    if (line[0] != '~') {
        n = value_of(line[0], 0);
        pos = 1;
    } else if (line.size() >= 2 && line[1] != '~') {
        if (line.size() < 4) throw std::invalid_argument("graph6: truncated order header");
        n = 0;
        for (pos = 1; pos < 4; ++pos) n = (n << 6) | value_of(line[pos], pos);
        if (n < 63) throw std::invalid_argument("graph6: non-canonical long order header");
    } else {
        if (line.size() < 8) throw std::invalid_argument("graph6: truncated order header");
        n = 0;
        for (pos = 2; pos < 8; ++pos) n = (n << 6) | value_of(line[pos], pos);
        if (n < 258048) throw std::invalid_argument("graph6: non-canonical long order header");
    }
    if (n < 1) throw std::invalid_argument("graph6: order must be >= 1");
    if (n > 258047)
        throw std::invalid_argument("graph6: order " + std::to_string(n) +
                                    " beyond supported range");

    const long long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos < body) throw std::invalid_argument("graph6: truncated bit body");
    if (line.size() - pos > body) throw std::invalid_argument("graph6: trailing characters");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    // Upper triangle, column-major: (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int group = value_of(line[pos + static_cast<std::size_t>(bit / 6)],
                                       pos + static_cast<std::size_t>(bit / 6));
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // Padding bits of the last group must be zero.
    for (; bit < static_cast<long long>(body) * 6; ++bit) {
        const int group = value_of(line[pos + static_cast<std::size_t>(bit / 6)],
                                   pos + static_cast<std::size_t>(bit / 6));
        if ((group >> (5 - bit % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("write_graph6: order must be >= 1");

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        throw std::invalid_argument("write_graph6: order beyond supported range");
    }

    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph6 file: " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

Graph parse_adjacency_text(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("adjacency text: missing \"n m\" header");
    if (n < 1) throw std::invalid_argument("adjacency text: order must be >= 1");
    if (m < 0) throw std::invalid_argument("adjacency text: negative edge count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        int u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("adjacency text: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(k));
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph read_adjacency_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open adjacency file: " + path);
    return parse_adjacency_text(in);
}

void write_adjacency_text(const Graph& g, std::ostream& out) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace domviz
