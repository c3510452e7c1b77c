// signed_graph.hpp - signed graph value type, degree predicates, switching,
// balance, and the s-neighbourhood corona.
#pragma once

#include <sncorona/error.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sncorona {

using Vertex = std::size_t;

enum class Sign : int { Negative = -1, Positive = 1 };

constexpr int value(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign flip(Sign s) noexcept { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::Positive : Sign::Negative; }

struct SignedEdge {
    Vertex u;
    Vertex v;
    Sign sign;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Input triple for from_edge_list; endpoints in any order.
struct EdgeTriple {
    Vertex u;
    Vertex v;
    int sign;  // +1 or -1
};

/// Immutable signed graph S = (G, sigma). Edges are stored with u < v,
/// sorted lexicographically, so two graphs with the same labelled edge set
/// compare equal.
class SignedGraph {
public:
    SignedGraph() = default;

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    std::span<const SignedEdge> edges() const noexcept { return edges_; }

    /// Sign of edge {u, v}, or empty when the vertices are not adjacent.
    std::optional<Sign> sign_of(Vertex u, Vertex v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                                   [](const SignedEdge& e, const std::pair<Vertex, Vertex>& key) {
                                       return std::pair{e.u, e.v} < key;
                                   });
        if (it != edges_.end() && it->u == u && it->v == v) return it->sign;
        return std::nullopt;
    }

    /// Neighbour lists with edge signs, indexed by vertex.
    std::vector<std::vector<std::pair<Vertex, Sign>>> neighbours() const {
        std::vector<std::vector<std::pair<Vertex, Sign>>> adj(n_);
        for (const auto& e : edges_) {
            adj[e.u].emplace_back(e.v, e.sign);
            adj[e.v].emplace_back(e.u, e.sign);
        }
        return adj;
    }

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    friend SignedGraph from_edge_list(std::size_t n, std::span<const EdgeTriple> triples);

    SignedGraph(std::size_t n, std::vector<SignedEdge> edges) : n_(n), edges_(std::move(edges)) {}

    std::size_t n_ = 0;
    std::vector<SignedEdge> edges_;
};

/// Builds a normalized graph. A repeated pair is a DuplicateEdge error
/// whether or not the signs agree.
inline SignedGraph from_edge_list(std::size_t n, std::span<const EdgeTriple> triples) {
    std::vector<SignedEdge> edges;
    edges.reserve(triples.size());
    for (const auto& t : triples) {
        if (t.u >= n || t.v >= n) {
            throw Error(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(t.u) + ", " +
                                                        std::to_string(t.v) + ") with n = " + std::to_string(n));
        }
        if (t.u == t.v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(t.u));
        if (t.sign != 1 && t.sign != -1) {
            throw Error(ErrorCode::ParseError, "edge sign must be +1 or -1, got " + std::to_string(t.sign));
        }
        edges.push_back({std::min(t.u, t.v), std::max(t.u, t.v), t.sign > 0 ? Sign::Positive : Sign::Negative});
    }
    std::sort(edges.begin(), edges.end(),
              [](const SignedEdge& a, const SignedEdge& b) { return std::pair{a.u, a.v} < std::pair{b.u, b.v}; });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
            throw Error(ErrorCode::DuplicateEdge,
                        "pair (" + std::to_string(edges[i].u) + ", " + std::to_string(edges[i].v) + ") listed twice");
        }
    }
    return SignedGraph(n, std::move(edges));
}

inline SignedGraph from_edge_list(std::size_t n, std::initializer_list<EdgeTriple> triples) {
    return from_edge_list(n, std::span<const EdgeTriple>(triples.begin(), triples.size()));
}

inline std::vector<EdgeTriple> to_triples(const SignedGraph& s) {
    std::vector<EdgeTriple> out;
    out.reserve(s.size());
    for (const auto& e : s.edges()) out.push_back({e.u, e.v, value(e.sign)});
    return out;
}

struct VertexDegrees {
    int degree = 0;    // d
    int positive = 0;  // d+
    int negative = 0;  // d-
    int net = 0;       // d+ - d-

    friend bool operator==(const VertexDegrees&, const VertexDegrees&) = default;
};

using DegreeProfile = std::vector<VertexDegrees>;

inline DegreeProfile degrees(const SignedGraph& s) {
    DegreeProfile out(s.order());
    for (const auto& e : s.edges()) {
        for (Vertex w : {e.u, e.v}) {
            auto& d = out[w];
            ++d.degree;
            if (e.sign == Sign::Positive) ++d.positive; else ++d.negative;
            d.net = d.positive - d.negative;
        }
    }
    return out;
}

namespace detail {
template <class F>
std::optional<int> common_value(const SignedGraph& s, F field) {
    const auto prof = degrees(s);
    if (prof.empty()) return std::nullopt;
    const int first = field(prof.front());
    for (const auto& d : prof)
        if (field(d) != first) return std::nullopt;
    return first;
}
}  // namespace detail

/// Common degree r when S is r-regular.
inline std::optional<int> regularity(const SignedGraph& s) {
    return detail::common_value(s, [](const VertexDegrees& d) { return d.degree; });
}

/// Common net degree when S is net-regular.
inline std::optional<int> net_regularity(const SignedGraph& s) {
    return detail::common_value(s, [](const VertexDegrees& d) { return d.net; });
}

/// Connected component id per vertex, numbered in order of first vertex.
inline std::vector<std::size_t> component_ids(const SignedGraph& s) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(s.order(), unset);
    const auto adj = s.neighbours();
    std::size_t next = 0;
    for (Vertex root = 0; root < s.order(); ++root) {
        if (comp[root] != unset) continue;
        std::queue<Vertex> q;
        q.push(root);
        comp[root] = next;
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (auto [y, sg] : adj[x]) {
                if (comp[y] == unset) {
                    comp[y] = next;
                    q.push(y);
                }
            }
        }
        ++next;
    }
    return comp;
}

inline bool is_connected(const SignedGraph& s) {
    const auto comp = component_ids(s);
    return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

/// Switching potential: a +-1 labelling x with sigma(uv) = x(u) x(v) on every
/// edge, if one exists. Roots of the BFS forest get +1.
inline std::optional<std::vector<Sign>> switching_potential(const SignedGraph& s) {
    std::vector<std::optional<Sign>> pot(s.order());
    const auto adj = s.neighbours();
    for (Vertex root = 0; root < s.order(); ++root) {
        if (pot[root]) continue;
        pot[root] = Sign::Positive;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (auto [y, sg] : adj[x]) {
                const Sign want = *pot[x] * sg;
                if (!pot[y]) {
                    pot[y] = want;
                    q.push(y);
                } else if (*pot[y] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Sign> out;
    out.reserve(pot.size());
    for (const auto& p : pot) out.push_back(*p);
    return out;
}

/// True iff every cycle has positive sign.
inline bool is_balanced(const SignedGraph& s) { return switching_potential(s).has_value(); }

/// Vertex subset X for switching. Validated against a graph on use.
struct SwitchSet {
    std::vector<Vertex> vertices;
};

/// S^X: negate every edge with exactly one endpoint in X.
inline SignedGraph switch_graph(const SignedGraph& s, const SwitchSet& x) {
    std::vector<bool> in(s.order(), false);
    for (Vertex v : x.vertices) {
        if (v >= s.order()) {
            throw Error(ErrorCode::IndexOutOfRange, "switch vertex " + std::to_string(v) + " with n = " +
                                                        std::to_string(s.order()));
        }
        in[v] = true;
    }
    auto triples = to_triples(s);
    for (auto& t : triples)
        if (in[t.u] != in[t.v]) t.sign = -t.sign;
    return from_edge_list(s.order(), triples);
}

/// Index of vertex a of the i-th copy of S2 inside S1 *s S2. S1 occupies
/// 0..n1-1; copy i is the contiguous block starting at n1 + i*n2.
constexpr Vertex corona_copy_vertex(std::size_t n1, std::size_t n2, std::size_t copy, Vertex a) noexcept {
    return n1 + copy * n2 + a;
}

/// S1 *s S2: one copy of S1 plus n1 copies of S2, where every neighbour v_k
/// of v_i is joined to every vertex of copy i with the sign of edge v_i v_k.
inline SignedGraph s_neighbourhood_corona(const SignedGraph& s1, const SignedGraph& s2) {
    const std::size_t n1 = s1.order();
    const std::size_t n2 = s2.order();
    std::vector<EdgeTriple> triples;
    triples.reserve(s1.size() * (1 + 2 * n2) + n1 * s2.size());
    for (const auto& e : s1.edges()) {
        const int sg = value(e.sign);
        triples.push_back({e.u, e.v, sg});
        for (Vertex a = 0; a < n2; ++a) {
            triples.push_back({e.v, corona_copy_vertex(n1, n2, e.u, a), sg});
            triples.push_back({e.u, corona_copy_vertex(n1, n2, e.v, a), sg});
        }
    }
    for (std::size_t copy = 0; copy < n1; ++copy) {
        for (const auto& e : s2.edges()) {
            triples.push_back(
                {corona_copy_vertex(n1, n2, copy, e.u), corona_copy_vertex(n1, n2, copy, e.v), value(e.sign)});
        }
    }
    return from_edge_list(n1 * (n2 + 1), triples);
}

/// Vertex-disjoint union; S2's vertices are shifted by |V(S1)|.
inline SignedGraph disjoint_union(const SignedGraph& s1, const SignedGraph& s2) {
    auto triples = to_triples(s1);
    for (const auto& e : s2.edges()) triples.push_back({e.u + s1.order(), e.v + s1.order(), value(e.sign)});
    return from_edge_list(s1.order() + s2.order(), triples);
}

/// Relabels vertices: vertex v of S becomes perm[v].
inline SignedGraph relabel(const SignedGraph& s, std::span<const Vertex> perm) {
    auto triples = to_triples(s);
    for (auto& t : triples) {
        t.u = perm[t.u];
        t.v = perm[t.v];
    }
    return from_edge_list(s.order(), triples);
}

}  // namespace sncorona
