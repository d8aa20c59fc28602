#include "domviz/families.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace domviz {

namespace {

void require_order(int n, int min, const char* family) {
    if (n < min)
        throw std::invalid_argument(std::string(family) + ": order must be >= " +
                                    std::to_string(min) + ", got " + std::to_string(n));
}

}  // namespace

Graph path_graph(int n) {
    require_order(n, 1, "path_graph");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    require_order(n, 3, "cycle_graph");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    require_order(n, 1, "complete_graph");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
    require_order(a, 1, "complete_bipartite");
    require_order(b, 1, "complete_bipartite");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

Graph star_graph(int n) {
    require_order(n, 1, "star_graph");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph(n, edges);
}

Graph empty_graph(int n) {
    require_order(n, 1, "empty_graph");
    return Graph(n, {});
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);      // outer cycle
        edges.emplace_back(i, i + 5);            // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    require_order(n, 1, "random_graph");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("random_graph: p must be in [0,1], got " + std::to_string(p));
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::uint64_t draw = rng();
            // 53-bit mantissa mapping to [0,1); avoids the
            // implementation-defined std::uniform_real_distribution.
            const double unit = static_cast<double>(draw >> 11) * 0x1.0p-53;
            if (unit < p) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

}  // namespace domviz
