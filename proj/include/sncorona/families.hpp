// families.hpp - small named signed graphs used by tests, catalogs and the CLI.
#pragma once

#include <sncorona/signed_graph.hpp>

#include <vector>

namespace sncorona::families {

inline SignedGraph edgeless(std::size_t n) { return from_edge_list(n, std::span<const EdgeTriple>{}); }

inline SignedGraph complete(std::size_t n, Sign sign = Sign::Positive) {
    std::vector<EdgeTriple> t;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) t.push_back({u, v, value(sign)});
    return from_edge_list(n, t);
}

inline SignedGraph cycle(std::size_t n, Sign sign = Sign::Positive) {
    std::vector<EdgeTriple> t;
    for (Vertex u = 0; u < n; ++u) t.push_back({u, (u + 1) % n, value(sign)});
    return from_edge_list(n, t);
}

/// Even cycle whose edge signs alternate; every vertex has net degree 0.
inline SignedGraph alternating_cycle(std::size_t n) {
    std::vector<EdgeTriple> t;
    for (Vertex u = 0; u < n; ++u) t.push_back({u, (u + 1) % n, u % 2 == 0 ? 1 : -1});
    return from_edge_list(n, t);
}

/// C4 with exactly one negative edge, (0,3).
inline SignedGraph unbalanced_c4() { return from_edge_list(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, -1}}); }

inline SignedGraph path(std::size_t n, Sign sign = Sign::Positive) {
    std::vector<EdgeTriple> t;
    for (Vertex u = 0; u + 1 < n; ++u) t.push_back({u, u + 1, value(sign)});
    return from_edge_list(n, t);
}

/// K_{p,q}: part one is 0..p-1, part two is p..p+q-1.
inline SignedGraph complete_bipartite(std::size_t p, std::size_t q, Sign sign = Sign::Positive) {
    std::vector<EdgeTriple> t;
    for (Vertex u = 0; u < p; ++u)
        for (Vertex v = 0; v < q; ++v) t.push_back({u, p + v, value(sign)});
    return from_edge_list(p + q, t);
}

inline SignedGraph star(std::size_t leaves, Sign sign = Sign::Positive) { return complete_bipartite(1, leaves, sign); }

}  // namespace sncorona::families
