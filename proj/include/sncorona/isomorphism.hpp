// isomorphism.hpp - brute-force (switching) isomorphism for desk-scale graphs.
//
// Backtracking over vertex bijections in BFS order of the first graph, with
// degree-signature pruning. Switching isomorphism carries a +-1 potential
// along the partial map, so a branch dies as soon as the cycle signs of the
// two mapped subgraphs disagree.
#pragma once

#include <sncorona/signed_graph.hpp>

#include <algorithm>
#include <tuple>
#include <vector>

namespace sncorona {

inline constexpr std::size_t default_isomorphism_cap = 12;

namespace detail {

class IsoSearch {
public:
    IsoSearch(const SignedGraph& a, const SignedGraph& b, bool switching)
        : n_(a.order()), switching_(switching), sa_(dense(a)), sb_(dense(b)),
          sig_a_(signatures(a, switching)), sig_b_(signatures(b, switching)),
          order_(bfs_order(a)), image_(n_, npos), used_(n_, false), potential_(n_, 0) {}

    bool run() {
        auto sa = sig_a_;
        auto sb = sig_b_;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
        return extend(0);
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    using Signature = std::tuple<int, int, int>;

    static std::vector<signed char> dense(const SignedGraph& s) {
        std::vector<signed char> m(s.order() * s.order(), 0);
        for (const auto& e : s.edges()) {
            m[e.u * s.order() + e.v] = static_cast<signed char>(value(e.sign));
            m[e.v * s.order() + e.u] = static_cast<signed char>(value(e.sign));
        }
        return m;
    }

    static std::vector<Signature> signatures(const SignedGraph& s, bool switching) {
        std::vector<Signature> out;
        for (const auto& d : degrees(s)) {
            // d+ and d- are not switching invariants.
            out.emplace_back(d.degree, switching ? 0 : d.positive, switching ? 0 : d.negative);
        }
        return out;
    }

    static std::vector<Vertex> bfs_order(const SignedGraph& s) {
        std::vector<Vertex> order;
        std::vector<bool> seen(s.order(), false);
        const auto adj = s.neighbours();
        for (Vertex root = 0; root < s.order(); ++root) {
            if (seen[root]) continue;
            seen[root] = true;
            std::size_t head = order.size();
            order.push_back(root);
            while (head < order.size()) {
                Vertex x = order[head++];
                for (auto [y, sg] : adj[x]) {
                    if (!seen[y]) {
                        seen[y] = true;
                        order.push_back(y);
                    }
                }
            }
        }
        return order;
    }

    bool extend(std::size_t depth) {
        if (depth == n_) return true;
        const Vertex x = order_[depth];
        for (Vertex y = 0; y < n_; ++y) {
            if (used_[y] || sig_a_[x] != sig_b_[y]) continue;
            int px = 0;
            if (!consistent(x, y, depth, px)) continue;
            image_[x] = y;
            used_[y] = true;
            potential_[x] = px;
            if (extend(depth + 1)) return true;
            used_[y] = false;
            image_[x] = npos;
        }
        return false;
    }

    bool consistent(Vertex x, Vertex y, std::size_t depth, int& px) const {
        px = 0;
        for (std::size_t k = 0; k < depth; ++k) {
            const Vertex w = order_[k];
            const int s1 = sa_[x * n_ + w];
            const int s2 = sb_[y * n_ + image_[w]];
            if ((s1 == 0) != (s2 == 0)) return false;
            if (s1 == 0) continue;
            if (!switching_) {
                if (s1 != s2) return false;
                continue;
            }
            const int want = s1 * s2 * potential_[w];
            if (px == 0) px = want;
            else if (px != want) return false;
        }
        if (px == 0) px = 1;
        return true;
    }

    std::size_t n_;
    bool switching_;
    std::vector<signed char> sa_, sb_;
    std::vector<Signature> sig_a_, sig_b_;
    std::vector<Vertex> order_;
    std::vector<std::size_t> image_;
    std::vector<bool> used_;
    std::vector<int> potential_;
};

inline void check_cap(const SignedGraph& s, std::size_t cap) {
    if (s.order() > cap) {
        throw Error(ErrorCode::SizeLimitExceeded, "brute-force isomorphism on " + std::to_string(s.order()) +
                                                      " vertices exceeds cap " + std::to_string(cap));
    }
}

}  // namespace detail

/// True iff some vertex bijection maps edges onto edges with identical signs.
inline bool is_isomorphic(const SignedGraph& a, const SignedGraph& b, std::size_t cap = default_isomorphism_cap) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    detail::check_cap(a, cap);
    return detail::IsoSearch(a, b, false).run();
}

/// True iff some relabelling of `a` is switching equivalent to `b`: same
/// underlying graph and the same sign on every cycle.
inline bool is_switching_isomorphic(const SignedGraph& a, const SignedGraph& b,
                                    std::size_t cap = default_isomorphism_cap) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    detail::check_cap(a, cap);
    return detail::IsoSearch(a, b, true).run();
}

}  // namespace sncorona
