// generators.hpp - random signed graphs for the randomized theorem checks.
//
// Uniform random signed graphs are almost never (net-)regular, so the
// regular and net-regular draws come from fixed families:
//   all-positive k-regular, all-negative k-regular, sign-alternating even
//   cycles, and k-regular graphs with one perfect matching negated
//   (net degree k - 2).
#pragma once

#include <sncorona/families.hpp>
#include <sncorona/signed_graph.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace sncorona::gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Erdos-Renyi underlying graph with independent edge signs.
inline SignedGraph random_signed(Rng& rng, std::size_t n, double p_edge = 0.5, double p_negative = 0.5) {
    std::vector<EdgeTriple> t;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng, p_edge)) t.push_back({u, v, coin(rng, p_negative) ? -1 : 1});
    return from_edge_list(n, t);
}

/// Connected graph: random spanning tree plus extra edges.
inline SignedGraph random_connected(Rng& rng, std::size_t n, double p_extra = 0.3, double p_negative = 0.0) {
    std::vector<EdgeTriple> t;
    std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
    for (Vertex v = 1; v < n; ++v) {
        const Vertex u = uniform(rng, 0, v - 1);
        t.push_back({u, v, coin(rng, p_negative) ? -1 : 1});
        has[u][v] = true;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!has[u][v] && coin(rng, p_extra)) t.push_back({u, v, coin(rng, p_negative) ? -1 : 1});
    return from_edge_list(n, t);
}

/// Unsigned k-regular graph on n vertices (requires k < n, n k even) by the
/// pairing model with rejection; falls back to a circulant graph.
inline std::vector<std::pair<Vertex, Vertex>> random_regular_edges(Rng& rng, std::size_t n, std::size_t k) {
    if (k == 0 || n == 0) return {};
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Vertex> points;
        for (Vertex v = 0; v < n; ++v) points.insert(points.end(), k, v);
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<std::pair<Vertex, Vertex>> edges;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < points.size() && ok; i += 2) {
            const std::pair<Vertex, Vertex> e{std::min(points[i], points[i + 1]), std::max(points[i], points[i + 1])};
            if (e.first == e.second || std::find(edges.begin(), edges.end(), std::pair{e.first, e.second}) != edges.end())
                ok = false;
            else
                edges.emplace_back(e.first, e.second);
        }
        if (ok) return edges;
    }
    // Circulant: jumps 1..k/2, plus n/2 when k is odd (n is then even).
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t j = 1; j <= k / 2; ++j) {
            const Vertex w = (v + j) % n;
            const std::pair<Vertex, Vertex> e{std::min(v, w), std::max(v, w)};
            if (std::find(edges.begin(), edges.end(), std::pair{e.first, e.second}) == edges.end())
                edges.emplace_back(e.first, e.second);
        }
        if (k % 2 == 1 && v < n / 2) edges.emplace_back(v, v + n / 2);
    }
    return edges;
}

/// Degrees k with 0 <= k < n and n k even; `min_k` filters the low end.
inline std::optional<std::size_t> random_feasible_degree(Rng& rng, std::size_t n, std::size_t min_k = 0) {
    std::vector<std::size_t> ks;
    for (std::size_t k = min_k; k < n; ++k)
        if ((n * k) % 2 == 0) ks.push_back(k);
    if (ks.empty()) return std::nullopt;
    return ks[uniform(rng, 0, ks.size() - 1)];
}

inline SignedGraph with_signs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                              const std::vector<int>& signs) {
    std::vector<EdgeTriple> t;
    for (std::size_t i = 0; i < edges.size(); ++i) t.push_back({edges[i].first, edges[i].second, signs[i]});
    return from_edge_list(n, t);
}

/// Regular underlying graph with independent random signs.
inline SignedGraph random_regular_signed(Rng& rng, std::size_t n, double p_negative = 0.5) {
    const std::size_t k = random_feasible_degree(rng, n).value_or(0);
    const auto edges = random_regular_edges(rng, n, k);
    std::vector<int> signs;
    for (std::size_t i = 0; i < edges.size(); ++i) signs.push_back(coin(rng, p_negative) ? -1 : 1);
    return with_signs(n, edges, signs);
}

/// Indices of a perfect matching within `edges`, if one exists.
inline std::optional<std::vector<std::size_t>> perfect_matching(std::size_t n,
                                                                const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n % 2) return std::nullopt;
    std::vector<bool> covered(n, false);
    std::vector<std::size_t> chosen;
    auto search = [&](auto&& self) -> bool {
        Vertex v = 0;
        while (v < n && covered[v]) ++v;
        if (v == n) return true;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto [a, b] = edges[i];
            const Vertex w = a == v ? b : (b == v ? a : n);
            if (w == n || covered[w]) continue;
            covered[v] = covered[w] = true;
            chosen.push_back(i);
            if (self(self)) return true;
            chosen.pop_back();
            covered[v] = covered[w] = false;
        }
        return false;
    };
    if (!search(search)) return std::nullopt;
    return chosen;
}

enum class NetRegularFamily { AllPositiveRegular, AllNegativeRegular, AlternatingCycle, NegatedMatching };

inline std::string to_string(NetRegularFamily f) {
    switch (f) {
        case NetRegularFamily::AllPositiveRegular: return "all-positive regular";
        case NetRegularFamily::AllNegativeRegular: return "all-negative regular";
        case NetRegularFamily::AlternatingCycle: return "alternating even cycle";
        case NetRegularFamily::NegatedMatching: return "regular with negated perfect matching";
    }
    return "?";
}

/// Net-regular signed graph on 1..max_n vertices from the families above.
/// With nonzero_net = true the net degree is never 0 (and n >= 2).
/// Every returned graph is also degree-regular.
inline SignedGraph random_net_regular(Rng& rng, std::size_t max_n, bool nonzero_net = false,
                                      NetRegularFamily* family_out = nullptr) {
    for (;;) {
        const auto family = static_cast<NetRegularFamily>(uniform(rng, 0, 3));
        const std::size_t n = uniform(rng, nonzero_net ? 2 : 1, std::max<std::size_t>(max_n, nonzero_net ? 2 : 1));
        std::optional<SignedGraph> g;
        switch (family) {
            case NetRegularFamily::AllPositiveRegular:
            case NetRegularFamily::AllNegativeRegular: {
                const auto k = random_feasible_degree(rng, n, nonzero_net ? 1 : 0);
                if (!k) break;
                const auto edges = random_regular_edges(rng, n, *k);
                const int s = family == NetRegularFamily::AllPositiveRegular ? 1 : -1;
                g = with_signs(n, edges, std::vector<int>(edges.size(), s));
                break;
            }
            case NetRegularFamily::AlternatingCycle:
                if (nonzero_net || max_n < 4) break;
                g = families::alternating_cycle(2 * uniform(rng, 2, max_n / 2));
                break;
            case NetRegularFamily::NegatedMatching: {
                if (n % 2) break;
                const auto k = random_feasible_degree(rng, n, 1);
                if (!k || (nonzero_net && *k == 2)) break;
                const auto edges = random_regular_edges(rng, n, *k);
                const auto m = perfect_matching(n, edges);
                if (!m) break;
                std::vector<int> signs(edges.size(), 1);
                for (std::size_t i : *m) signs[i] = -1;
                g = with_signs(n, edges, signs);
                break;
            }
        }
        if (g) {
            if (family_out) *family_out = family;
            return *g;
        }
    }
}

inline SwitchSet random_switch_set(Rng& rng, std::size_t n) {
    SwitchSet x;
    for (Vertex v = 0; v < n; ++v)
        if (coin(rng)) x.vertices.push_back(v);
    return x;
}

}  // namespace sncorona::gen
