#include "domviz/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace domviz {

namespace {

// Pair bit index for i < j in lexicographic (i, j) order.
int pair_bit(int i, int j, int n) {
    // offset of row i = sum_{r<i} (n-1-r)
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Graph graph_from_mask(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(i, j);
    return Graph(n, edges);
}

// True iff no permutation of the vertices yields a smaller edge mask.
bool is_canonical(int n, std::uint32_t mask, const std::vector<std::vector<int>>& perms) {
    for (const auto& perm : perms) {
        std::uint32_t image = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j, ++bit) {
                if (!((mask >> bit) & 1)) continue;
                int a = perm[static_cast<std::size_t>(i)];
                int b = perm[static_cast<std::size_t>(j)];
                if (a > b) std::swap(a, b);
                image |= std::uint32_t{1} << pair_bit(a, b, n);
            }
        }
        if (image < mask) return false;
    }
    return true;
}

bool mask_connected(int n, std::uint32_t mask) {
    std::uint32_t reached = 1;  // vertex 0
    for (int round = 0; round < n; ++round) {
        std::uint32_t next = reached;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if ((mask >> bit) & 1) {
                    if (reached & (1u << i)) next |= 1u << j;
                    if (reached & (1u << j)) next |= 1u << i;
                }
        if (next == reached) break;
        reached = next;
    }
    return reached == (n == 32 ? ~0u : (1u << n) - 1);
}

}  // namespace

std::vector<Graph> all_graphs_up_to_iso(int n, bool connected_only) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("all_graphs_up_to_iso: order must be in [1,6]");

    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) perms.push_back(perm);

    const int bits = n * (n - 1) / 2;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits); ++mask) {
        if (connected_only && !mask_connected(n, mask)) continue;
        if (!is_canonical(n, mask, perms)) continue;
        out.push_back(graph_from_mask(n, mask));
    }
    return out;
}

std::vector<Graph> small_graph_corpus(int max_n, bool connected_only) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto batch = all_graphs_up_to_iso(n, connected_only);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace domviz
