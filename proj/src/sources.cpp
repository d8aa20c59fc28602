#include "domviz/sources.hpp"

#include <charconv>
#include <filesystem>
#include <iterator>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "domviz/corpus.hpp"
#include "domviz/families.hpp"
#include "domviz/graph6.hpp"

namespace domviz {

namespace {

[[noreturn]] void bad_spec(const std::string& spec, const std::string& why) {
    throw std::invalid_argument("bad graph spec \"" + spec + "\": " + why);
}

int parse_int(std::string_view s, const std::string& spec) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        bad_spec(spec, "expected an integer, got \"" + std::string(s) + "\"");
    return value;
}

std::uint64_t parse_u64(std::string_view s, const std::string& spec) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        bad_spec(spec, "expected a seed, got \"" + std::string(s) + "\"");
    return value;
}

double parse_prob(std::string_view s, const std::string& spec) {
    double value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value < 0.0 || value > 1.0)
        bad_spec(spec, "expected a probability in [0, 1], got \"" + std::string(s) + "\"");
    return value;
}

// "5" -> [5, 5]; "2..6" -> [2, 6].
std::pair<int, int> parse_range(std::string_view s, const std::string& spec) {
    const auto dots = s.find("..");
    if (dots == std::string_view::npos) {
        const int n = parse_int(s, spec);
        return {n, n};
    }
    const int lo = parse_int(s.substr(0, dots), spec);
    const int hi = parse_int(s.substr(dots + 2), spec);
    if (lo > hi) bad_spec(spec, "empty range " + std::string(s));
    return {lo, hi};
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = s.find(sep);
        if (pos == std::string_view::npos) {
            out.push_back(s);
            return out;
        }
        out.push_back(s.substr(0, pos));
        s.remove_prefix(pos + 1);
    }
}

using Maker = Graph (*)(int);

void expand_simple_family(const std::string& spec, const std::string& name,
                          std::string_view params, Maker make,
                          std::vector<GraphSource>& out) {
    const auto [lo, hi] = parse_range(params, spec);
    for (int n = lo; n <= hi; ++n)
        out.push_back({name + ":" + std::to_string(n), make(n)});
}

void expand_corpus(const std::string& spec, const std::string& name, std::string_view params,
                   bool connected_only, std::vector<GraphSource>& out) {
    const auto [lo, hi] = parse_range(params, spec);
    for (int n = lo; n <= hi; ++n) {
        const std::vector<Graph> graphs = all_graphs_up_to_iso(n, connected_only);
        for (std::size_t k = 0; k < graphs.size(); ++k)
            out.push_back({name + ":" + std::to_string(n) + "#" + std::to_string(k),
                           graphs[k]});
    }
}

}  // namespace

std::vector<GraphSource> expand_spec(const std::string& spec, std::uint64_t default_seed) {
    std::vector<GraphSource> out;
    const auto colon = spec.find(':');

    // A bare token with no family prefix must be a graph6 file on disk.
    const std::string name = colon == std::string::npos ? "" : spec.substr(0, colon);
    const std::string_view params =
        colon == std::string::npos ? std::string_view{}
                                   : std::string_view(spec).substr(colon + 1);

    if (colon == std::string::npos || name == "file") {
        const std::string path =
            colon == std::string::npos ? spec : std::string(params);
        if (!std::filesystem::exists(path))
            bad_spec(spec, "not a family spec and no such file");
        const std::vector<Graph> graphs = read_graph6_file(path);
        if (graphs.empty()) bad_spec(spec, "file contains no graphs");
        for (std::size_t k = 0; k < graphs.size(); ++k)
            out.push_back({path + "#" + std::to_string(k), graphs[k]});
        return out;
    }

    if (params.empty()) bad_spec(spec, "missing parameters after \"" + name + ":\"");

    if (name == "g6") {
        try {
            out.push_back({spec, parse_graph6(std::string(params))});
        } catch (const std::exception& e) {
            bad_spec(spec, e.what());
        }
        return out;
    }
    if (name == "path") {
        expand_simple_family(spec, name, params, &path_graph, out);
        return out;
    }
    if (name == "cycle") {
        expand_simple_family(spec, name, params, &cycle_graph, out);
        return out;
    }
    if (name == "complete") {
        expand_simple_family(spec, name, params, &complete_graph, out);
        return out;
    }
    if (name == "star") {
        expand_simple_family(spec, name, params, &star_graph, out);
        return out;
    }
    if (name == "empty") {
        expand_simple_family(spec, name, params, &empty_graph, out);
        return out;
    }
    if (name == "complete_bipartite") {
        const auto parts = split(params, ',');
        if (parts.size() != 2) bad_spec(spec, "expected complete_bipartite:A,B");
        const int a = parse_int(parts[0], spec);
        const int b = parse_int(parts[1], spec);
        out.push_back({spec, complete_bipartite(a, b)});
        return out;
    }
    if (name == "random") {
        const auto parts = split(params, ',');
        if (parts.size() != 2 && parts.size() != 3)
            bad_spec(spec, "expected random:N,P[,SEED]");
        const auto [lo, hi] = parse_range(parts[0], spec);
        const double p = parse_prob(parts[1], spec);
        std::uint64_t seed = parts.size() == 3 ? parse_u64(parts[2], spec) : default_seed;
        for (int n = lo; n <= hi; ++n, ++seed) {
            std::string label = "random:" + std::to_string(n) + "," +
                                std::string(parts[1]) + "," + std::to_string(seed);
            out.push_back({std::move(label), random_graph(n, p, seed)});
        }
        return out;
    }
    if (name == "all" || name == "connected") {
        expand_corpus(spec, name, params, name == "connected", out);
        return out;
    }
    bad_spec(spec, "unknown family \"" + name + "\"");
}

std::vector<GraphSource> expand_specs(const std::vector<std::string>& specs,
                                      std::uint64_t default_seed) {
    std::vector<GraphSource> out;
    for (const std::string& spec : specs) {
        std::vector<GraphSource> part = expand_spec(spec, default_seed);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

}  // namespace domviz
