#include "domviz/product.hpp"

#include <string>

namespace domviz {

LabeledProduct cartesian_product(const Graph& g, const Graph& h, int max_order) {
    if (g.order() < 1 || h.order() < 1)
        throw std::invalid_argument("cartesian_product: factors must have order >= 1");
    const long long order = static_cast<long long>(g.order()) * h.order();
    if (order > max_order)
        throw InstanceTooLarge("cartesian_product: product order " + std::to_string(order) +
                               " exceeds cap " + std::to_string(max_order) +
                               "; instance too large for exact work");

    LabeledProduct out;
    out.g_order = g.order();
    out.h_order = h.order();

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(g.order()) * h.edge_count() +
                  static_cast<std::size_t>(h.order()) * g.edge_count());
    for (int u = 0; u < g.order(); ++u)
        for (auto [v, w] : h.edges()) edges.emplace_back(out.encode(u, v), out.encode(u, w));
    for (auto [u, w] : g.edges())
        for (int v = 0; v < h.order(); ++v) edges.emplace_back(out.encode(u, v), out.encode(w, v));

    out.product = Graph(static_cast<int>(order), edges);
    return out;
}

}  // namespace domviz
