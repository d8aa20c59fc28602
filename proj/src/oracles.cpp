#include "domviz/oracles.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace domviz {

namespace {

std::vector<std::uint32_t> closed_masks(const Graph& g) {
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        std::uint32_t m = std::uint32_t{1} << v;
        for (int u : g.neighbors(v)) m |= std::uint32_t{1} << u;
        masks[static_cast<std::size_t>(v)] = m;
    }
    return masks;
}

void require_cap(const Graph& g, int cap, const char* who) {
    if (g.order() < 1) throw std::invalid_argument(std::string(who) + ": order-0 graph");
    if (g.order() > cap)
        throw std::invalid_argument(std::string(who) + ": order " + std::to_string(g.order()) +
                                    " exceeds oracle cap " + std::to_string(cap));
}

}  // namespace

int brute_force_gamma(const Graph& g) {
    require_cap(g, 16, "brute_force_gamma");
    const int n = g.order();
    const auto masks = closed_masks(g);
    const std::uint32_t all = (n == 32 ? ~0u : (std::uint32_t{1} << n) - 1);
    for (int k = 1; k <= n; ++k) {
        // Gosper's hack over k-subsets of [0, n).
        std::uint32_t s = (std::uint32_t{1} << k) - 1;
        while (s < (std::uint32_t{1} << n)) {
            std::uint32_t covered = 0;
            for (std::uint32_t rest = s; rest;) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                covered |= masks[static_cast<std::size_t>(v)];
            }
            if (covered == all) return k;
            const std::uint32_t c = s & -s;
            const std::uint32_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return n;  // unreachable: the full set always dominates
}

int brute_force_gamma_roman(const Graph& g) {
    require_cap(g, 16, "brute_force_gamma_roman");
    const int n = g.order();
    const auto masks = closed_masks(g);
    int best = n;  // all-ones labeling
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
        const int size = std::popcount(s);
        if (2 * size >= best) continue;
        std::uint32_t covered = 0;
        for (std::uint32_t rest = s; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            covered |= masks[static_cast<std::size_t>(v)];
        }
        const int weight = 2 * size + (n - std::popcount(covered));
        if (weight < best) best = weight;
    }
    return best;
}

int brute_force_gamma_roman_labelings(const Graph& g) {
    require_cap(g, 12, "brute_force_gamma_roman_labelings");
    const int n = g.order();
    const auto masks = closed_masks(g);
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    int best = 2 * n + 1;
    while (true) {
        std::uint32_t twos = 0;
        int weight = 0;
        for (int v = 0; v < n; ++v) {
            weight += label[static_cast<std::size_t>(v)];
            if (label[static_cast<std::size_t>(v)] == 2) twos |= std::uint32_t{1} << v;
        }
        if (weight < best) {
            bool valid = true;
            for (int v = 0; v < n && valid; ++v)
                if (label[static_cast<std::size_t>(v)] == 0 &&
                    !((masks[static_cast<std::size_t>(v)] & ~(std::uint32_t{1} << v)) & twos))
                    valid = false;
            if (valid) best = weight;
        }
        // next ternary string
        int i = 0;
        while (i < n && label[static_cast<std::size_t>(i)] == 2) {
            label[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
        ++label[static_cast<std::size_t>(i)];
    }
    return best;
}

}  // namespace domviz
