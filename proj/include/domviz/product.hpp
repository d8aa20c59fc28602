#pragma once

#include <stdexcept>
#include <utility>

#include "domviz/graph.hpp"

namespace domviz {

// Largest product order the exact solvers will accept by default.
inline constexpr int kDefaultProductCap = 4096;

// Thrown when a requested product would exceed the configured order cap.
struct InstanceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cartesian product G□H together with the id <-> coordinate bijection.
// Product vertex id is u * |V(H)| + v (row-major on G); all traces and
// serialized sets rely on this fixed encoding.
struct LabeledProduct {
    Graph product;
    int g_order = 0;
    int h_order = 0;

    int encode(int u, int v) const {
        if (u < 0 || u >= g_order || v < 0 || v >= h_order)
            throw std::out_of_range("LabeledProduct::encode: coordinate out of range");
        return u * h_order + v;
    }

    std::pair<int, int> decode(int id) const {
        if (id < 0 || id >= g_order * h_order)
            throw std::out_of_range("LabeledProduct::decode: id out of range");
        return {id / h_order, id % h_order};
    }
};

// (u,v) ~ (u',v') iff u = u' and v ~_H v', or v = v' and u ~_G u'.
LabeledProduct cartesian_product(const Graph& g, const Graph& h,
                                 int max_order = kDefaultProductCap);

}  // namespace domviz
