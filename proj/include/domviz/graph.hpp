#pragma once

#include <utility>
#include <vector>

#include "domviz/vertex_set.hpp"

namespace domviz {

// Finite simple graph on vertices 0..n-1. Adjacency is one VertexSet row per
// vertex; rows are symmetric and loop-free by construction and never change
// after the constructor, so graphs can be shared freely across workers.
class Graph {
public:
    // Order-0 graph. Only the opt-in induced-subgraph path hands these out;
    // every other entry point requires order >= 1.
    Graph() = default;

    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return open_[static_cast<std::size_t>(u)].contains(v); }
    int degree(int v) const { return open_[static_cast<std::size_t>(v)].count(); }

    const VertexSet& neighbors(int v) const { return open_[static_cast<std::size_t>(v)]; }
    const VertexSet& closed_neighbors(int v) const { return closed_[static_cast<std::size_t>(v)]; }

    VertexSet vertices() const { return VertexSet::full(n_); }

    // Edge list as (u, v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.open_ == b.open_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> open_;
    std::vector<VertexSet> closed_;
};

// N(S) = union of N(v) over v in S.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

// N[S] = N(S) ∪ S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

// True iff N[S] = V(G).
bool is_dominating(const Graph& g, const VertexSet& s);

enum class AllowEmpty { no, yes };

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 where the vertex was dropped
    std::vector<int> new_to_old;
};

// Subgraph induced by S with vertices relabeled to 0..|S|-1 in ascending old
// id. Empty S is an error unless the caller opts in to an order-0 result.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s,
                                 AllowEmpty allow_empty = AllowEmpty::no);

bool is_connected(const Graph& g);

}  // namespace domviz
