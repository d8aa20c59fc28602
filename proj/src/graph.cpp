#include "domviz/graph.hpp"

#include <stdexcept>
#include <string>

namespace domviz {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("Graph: order must be >= 1, got " + std::to_string(n));
    n_ = n;
    open_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("Graph: edge endpoint (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") outside [0, " + std::to_string(n) +
                                        ")");
        if (a == b)
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(a));
        open_[static_cast<std::size_t>(a)].add(b);
        open_[static_cast<std::size_t>(b)].add(a);
    }
    closed_ = open_;
    m_ = 0;
    for (int v = 0; v < n; ++v) {
        closed_[static_cast<std::size_t>(v)].add(v);
        m_ += degree(v);
    }
    m_ /= 2;  // duplicate input pairs collapse in the bit rows
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = open_[static_cast<std::size_t>(u)].next_after(u); v >= 0;
             v = open_[static_cast<std::size_t>(u)].next_after(v))
            out.emplace_back(u, v);
    return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("open_neighborhood: set universe does not match graph order");
    VertexSet out(g.order());
    for (int v : s) out |= g.neighbors(v);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = open_neighborhood(g, s);
    out |= s;
    return out;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
    return closed_neighborhood(g, s).count() == g.order();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s, AllowEmpty allow_empty) {
    if (s.universe() != g.order())
        throw std::invalid_argument("induced_subgraph: set universe does not match graph order");
    InducedSubgraph out;
    out.new_to_old = s.to_vector();
    out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
    const int k = static_cast<int>(out.new_to_old.size());
    if (k == 0) {
        if (allow_empty == AllowEmpty::no)
            throw std::invalid_argument("induced_subgraph: empty vertex set (pass AllowEmpty::yes "
                                        "for the order-0 graph)");
        return out;  // default-constructed order-0 graph
    }
    for (int i = 0; i < k; ++i)
        out.old_to_new[static_cast<std::size_t>(out.new_to_old[static_cast<std::size_t>(i)])] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        const int u = out.new_to_old[static_cast<std::size_t>(i)];
        for (int v : g.neighbors(u) & s)
            if (v > u) edges.emplace_back(i, out.old_to_new[static_cast<std::size_t>(v)]);
    }
    out.graph = Graph(k, edges);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet reached(g.order());
    reached.add(0);
    while (true) {
        VertexSet next = closed_neighborhood(g, reached);
        if (next == reached) break;
        reached = next;
    }
    return reached.count() == g.order();
}

}  // namespace domviz
