#include "domviz/roman.hpp"

#include <stdexcept>

namespace domviz {

bool is_partition(const RomanFunction& f, int n) {
    if (f.v0.universe() != n || f.v1.universe() != n || f.v2.universe() != n) return false;
    if (f.v0.intersects(f.v1) || f.v0.intersects(f.v2) || f.v1.intersects(f.v2)) return false;
    return (f.v0 | f.v1 | f.v2).count() == n;
}

bool is_rdf(const Graph& g, const RomanFunction& f) {
    if (!is_partition(f, g.order()))
        throw std::invalid_argument("is_rdf: (v0,v1,v2) do not partition V(G)");
    return f.v0.is_subset_of(open_neighborhood(g, f.v2));
}

int roman_weight(const RomanFunction& f) { return f.v1.count() + 2 * f.v2.count(); }

RomanFunction rdf_from_v2(const Graph& g, const VertexSet& s) {
    RomanFunction f;
    f.v2 = s;
    const VertexSet covered = closed_neighborhood(g, s);
    f.v1 = covered.complement();
    f.v0 = covered - s;
    return f;
}

}  // namespace domviz
