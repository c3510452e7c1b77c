// spectra.hpp - adjacency, Laplacian and net Laplacian matrices of signed
// graphs, block assembly of the s-neighbourhood corona, and closed-form
// corona spectra.
//
// Naming of the regularity constants used by the closed forms:
//   r1  degree regularity of S1        (Laplacian)
//   r2  degree regularity of S2        (Laplacian)
//   r3  net regularity of S2           (Laplacian)
//   r2  net regularity of S2           (adjacency; this is the row sum of A(S2))
//   r   net regularity of S1           (net Laplacian)
#pragma once

#include <sncorona/charpoly.hpp>
#include <sncorona/eigen.hpp>
#include <sncorona/error.hpp>
#include <sncorona/exact.hpp>
#include <sncorona/matrix.hpp>
#include <sncorona/polynomial.hpp>
#include <sncorona/roots.hpp>
#include <sncorona/signed_graph.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sncorona {

enum class MatrixKind { Adjacency, Laplacian, NetLaplacian };

constexpr std::string_view to_string(MatrixKind k) noexcept {
    switch (k) {
        case MatrixKind::Adjacency: return "adj";
        case MatrixKind::Laplacian: return "lap";
        case MatrixKind::NetLaplacian: return "netlap";
    }
    return "?";
}

inline std::optional<MatrixKind> parse_matrix_kind(std::string_view s) {
    if (s == "adj" || s == "adjacency") return MatrixKind::Adjacency;
    if (s == "lap" || s == "laplacian") return MatrixKind::Laplacian;
    if (s == "netlap" || s == "net-laplacian") return MatrixKind::NetLaplacian;
    return std::nullopt;
}

inline IntMatrix adjacency_matrix(const SignedGraph& s) {
    IntMatrix a(s.order(), s.order());
    for (const auto& e : s.edges()) a(e.u, e.v) = a(e.v, e.u) = value(e.sign);
    return a;
}

/// D_S (net = false) or D_S^{+-} (net = true).
inline IntMatrix degree_matrix(const SignedGraph& s, bool net = false) {
    const auto prof = degrees(s);
    IntMatrix d(s.order(), s.order());
    for (std::size_t v = 0; v < prof.size(); ++v) d(v, v) = net ? prof[v].net : prof[v].degree;
    return d;
}

/// A_S, L_S = D_S - A_S, or N_S = D_S^{+-} - A_S.
inline IntMatrix matrix_of(const SignedGraph& s, MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Adjacency: return adjacency_matrix(s);
        case MatrixKind::Laplacian: return degree_matrix(s, false) - adjacency_matrix(s);
        case MatrixKind::NetLaplacian: return degree_matrix(s, true) - adjacency_matrix(s);
    }
    return {};
}

inline std::vector<double> numeric_eigenvalues(const SignedGraph& s, MatrixKind kind) {
    return jacobi_eigenvalues(to_real(matrix_of(s, kind)));
}

inline SpectrumMultiset numeric_spectrum(const SignedGraph& s, MatrixKind kind, double tol = default_cluster_tol) {
    return sym_eigenvalues(matrix_of(s, kind), tol);
}

/// Position of each corona vertex (copy-major layout of
/// s_neighbourhood_corona) in the block layout V(S1), V_1, ..., V_{n2},
/// where V_a collects vertex a of every copy.
inline std::vector<std::size_t> corona_block_permutation(std::size_t n1, std::size_t n2) {
    std::vector<std::size_t> perm(n1 * (n2 + 1));
    for (std::size_t v = 0; v < n1; ++v) perm[v] = v;
    for (std::size_t copy = 0; copy < n1; ++copy)
        for (std::size_t a = 0; a < n2; ++a) perm[corona_copy_vertex(n1, n2, copy, a)] = n1 + a * n1 + copy;
    return perm;
}

namespace detail {

inline IntMatrix block2x2(const IntMatrix& x1, const IntMatrix& x2, const IntMatrix& x3, const IntMatrix& x4) {
    IntMatrix out(x1.rows() + x3.rows(), x1.cols() + x2.cols());
    for (std::size_t i = 0; i < x1.rows(); ++i)
        for (std::size_t j = 0; j < x1.cols(); ++j) out(i, j) = x1(i, j);
    for (std::size_t i = 0; i < x2.rows(); ++i)
        for (std::size_t j = 0; j < x2.cols(); ++j) out(i, x1.cols() + j) = x2(i, j);
    for (std::size_t i = 0; i < x3.rows(); ++i)
        for (std::size_t j = 0; j < x3.cols(); ++j) out(x1.rows() + i, j) = x3(i, j);
    for (std::size_t i = 0; i < x4.rows(); ++i)
        for (std::size_t j = 0; j < x4.cols(); ++j) out(x1.rows() + i, x1.cols() + j) = x4(i, j);
    return out;
}

}  // namespace detail

/// The corona matrix assembled from the factors in block form:
///   Adjacency     [ A1            j^T (x) A1 ]   [ .  A2 (x) I_n1 ]
///   Laplacian     [ L1 + n2 D1    -(j^T (x) A1) ]  [ .  D1 (+) L2 ]
///   NetLaplacian  [ N1 + n2 D1+-  -(j^T (x) A1) ]  [ .  D1+- (+) N2 ]
/// with the lower-left block the transpose of the upper-right one.
inline IntMatrix assemble_corona_blocks(const SignedGraph& s1, const SignedGraph& s2, MatrixKind kind) {
    const std::size_t n1 = s1.order();
    const std::size_t n2 = s2.order();
    const IntMatrix a1 = adjacency_matrix(s1);
    const IntMatrix jt = IntMatrix::ones(1, n2);
    IntMatrix upper = kronecker_product(jt, a1);
    IntMatrix x1, x4;
    switch (kind) {
        case MatrixKind::Adjacency:
            x1 = a1;
            x4 = kronecker_product(adjacency_matrix(s2), IntMatrix::identity(n1));
            break;
        case MatrixKind::Laplacian: {
            const IntMatrix d1 = degree_matrix(s1, false);
            x1 = matrix_of(s1, MatrixKind::Laplacian) + d1 * Integer(n2);
            x4 = kronecker_sum(d1, matrix_of(s2, MatrixKind::Laplacian));
            upper = -upper;
            break;
        }
        case MatrixKind::NetLaplacian: {
            const IntMatrix d1 = degree_matrix(s1, true);
            x1 = matrix_of(s1, MatrixKind::NetLaplacian) + d1 * Integer(n2);
            x4 = kronecker_sum(d1, matrix_of(s2, MatrixKind::NetLaplacian));
            upper = -upper;
            break;
        }
    }
    return detail::block2x2(x1, upper, upper.transpose(), x4);
}

/// Right-hand side of the adjacency factorization
///   psi_{A(S1 *s S2)}(t) = psi_{A2}(t)^{n1} det(tI - A1 - coronal_{A2}(t) A1^2)
/// evaluated exactly at t0.
inline Rational corona_adjacency_charpoly_eval(const SignedGraph& s1, const SignedGraph& s2, const Rational& t0) {
    const IntMatrix a2 = adjacency_matrix(s2);
    const Rational psi2 = det_exact_at(a2, t0);
    if (psi2 == 0) {
        throw Error(ErrorCode::PoleAtEvaluationPoint, "t0 = " + to_string(t0) + " is an adjacency eigenvalue of S2");
    }
    const Rational kappa = coronal(a2)(t0);
    const std::size_t n1 = s1.order();
    const RationalMatrix a1 = to_rational(adjacency_matrix(s1));
    RationalMatrix x = RationalMatrix::identity(n1) * t0 - a1 - (a1 * a1) * kappa;
    Rational lhs = 1;
    for (std::size_t i = 0; i < n1; ++i) lhs *= psi2;
    return lhs * det_rational(std::move(x));
}

// ---------------------------------------------------------------------------
// Closed-form spectra

struct ClosedFormEntry {
    enum class Kind { Inherited, Poly };

    Kind kind = Kind::Inherited;
    double value = 0.0;           // Inherited
    std::vector<double> coeffs;   // Poly: monic, ascending degree (c0, c1, ..., 1)
    std::size_t multiplicity = 0; // per value, or per root of the polynomial

    std::size_t degree() const { return kind == Kind::Poly ? coeffs.size() - 1 : 1; }
};

/// Eigenvalue descriptors emitted by a theorem; `theorem` names the result
/// applied ("2.3", "2.4", "2.5", "3.3", "3.4", "4.2").
struct ClosedFormSpectrum {
    std::string theorem;
    std::vector<ClosedFormEntry> entries;

    /// Eigenvalue count, each root of a degree-d entry counted d times.
    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& e : entries) t += e.degree() * e.multiplicity;
        return t;
    }
};

/// Constant term of the cubic factor for (K_{p,q}, -): the value derived
/// from its coronal, or the printed pq theta (2 theta - 1).
enum class KpqVariant { Derived, Printed };

namespace detail {

/// Removes one copy of `target` from a clustered spectrum. Throws `code`
/// when no cluster lies within the scaled tolerance.
inline SpectrumMultiset exclude_one(const SpectrumMultiset& s, double target, double tol, ErrorCode code,
                                    const std::string& what) {
    double radius = 0.0;
    for (const auto& e : s.entries()) radius = std::max(radius, std::abs(e.value));
    std::size_t best = s.entries().size();
    double best_gap = INFINITY;
    for (std::size_t i = 0; i < s.entries().size(); ++i) {
        const double gap = std::abs(s.entries()[i].value - target);
        if (gap < best_gap) {
            best_gap = gap;
            best = i;
        }
    }
    if (best == s.entries().size() || best_gap / (1.0 + radius) >= tol) {
        throw Error(code, what + " " + std::to_string(target) + " is not an eigenvalue");
    }
    std::vector<Eigenvalue> out;
    for (std::size_t i = 0; i < s.entries().size(); ++i) {
        Eigenvalue e = s.entries()[i];
        if (i == best) --e.multiplicity;
        if (e.multiplicity) out.push_back(e);
    }
    return SpectrumMultiset(std::move(out));
}

inline void add_inherited(ClosedFormSpectrum& cf, const SpectrumMultiset& rest, double offset, std::size_t copies) {
    for (const auto& e : rest.entries()) {
        ClosedFormEntry entry;
        entry.kind = ClosedFormEntry::Kind::Inherited;
        entry.value = e.value + offset;
        entry.multiplicity = e.multiplicity * copies;
        cf.entries.push_back(std::move(entry));
    }
}

inline void add_poly(ClosedFormSpectrum& cf, std::vector<double> coeffs, std::size_t multiplicity) {
    ClosedFormEntry entry;
    entry.kind = ClosedFormEntry::Kind::Poly;
    entry.coeffs = std::move(coeffs);
    entry.multiplicity = multiplicity;
    cf.entries.push_back(std::move(entry));
}

}  // namespace detail

/// Adjacency spectrum of S1 *s S2 for net-regular S2 (net degree r2):
/// theta_j(S2) with multiplicity n1 for every eigenvalue but one copy of r2,
/// and for every theta of S1 the roots of
///   t^2 - (theta + r2) t + (theta r2 - n2 theta^2).
inline ClosedFormSpectrum closed_form_adjacency(const SignedGraph& s1, const SignedGraph& s2,
                                                double tol = default_cluster_tol) {
    const auto r2 = net_regularity(s2);
    if (!r2) throw Error(ErrorCode::NotNetRegular, "S2 must be net-regular");
    if (s1.order() == 0) throw Error(ErrorCode::HypothesisNotMet, "S1 must have at least one vertex");
    const double n2 = static_cast<double>(s2.order());
    const double r = *r2;

    ClosedFormSpectrum cf{"2.3", {}};
    const auto rest = detail::exclude_one(numeric_spectrum(s2, MatrixKind::Adjacency, tol), r, tol,
                                          ErrorCode::NetDegreeNotAnEigenvalue, "net degree");
    detail::add_inherited(cf, rest, 0.0, s1.order());
    const auto factor_spectrum = numeric_spectrum(s1, MatrixKind::Adjacency, tol);
    for (const auto& e : factor_spectrum.entries()) {
        const double th = e.value;
        detail::add_poly(cf, {th * r - n2 * th * th, -(th + r), 1.0}, e.multiplicity);
    }
    return cf;
}

/// Adjacency spectrum of S *s (K_{p,q}, sign): 0 with multiplicity
/// n(p+q-2), and for every theta of S the roots of
///   t^3 - theta t^2 - (pq + (p+q) theta^2) t + c0(theta)
/// with c0 = pq theta (1 + 2 theta) for sign -, -pq theta (2 theta - 1) for
/// sign +. KpqVariant::Printed swaps in pq theta (2 theta - 1) for sign -.
inline ClosedFormSpectrum closed_form_adjacency_kpq(const SignedGraph& s, std::size_t p, std::size_t q, Sign sign,
                                                    KpqVariant variant = KpqVariant::Derived,
                                                    double tol = default_cluster_tol) {
    if (p < 1 || q < 1) throw Error(ErrorCode::HypothesisNotMet, "p and q must be positive");
    if (s.order() == 0) throw Error(ErrorCode::HypothesisNotMet, "S must have at least one vertex");
    ClosedFormSpectrum cf{sign == Sign::Negative ? "2.4" : "2.5", {}};
    const double pq = static_cast<double>(p * q);
    const double ps = static_cast<double>(p + q);
    if (p + q > 2) {
        ClosedFormEntry zero;
        zero.value = 0.0;
        zero.multiplicity = s.order() * (p + q - 2);
        cf.entries.push_back(zero);
    }
    const auto factor_spectrum = numeric_spectrum(s, MatrixKind::Adjacency, tol);
    for (const auto& e : factor_spectrum.entries()) {
        const double th = e.value;
        double c0 = 0.0;
        if (sign == Sign::Negative) {
            c0 = variant == KpqVariant::Derived ? pq * th * (1.0 + 2.0 * th) : pq * th * (2.0 * th - 1.0);
        } else {
            c0 = -pq * th * (2.0 * th - 1.0);
        }
        detail::add_poly(cf, {c0, -(pq + ps * th * th), -th, 1.0}, e.multiplicity);
    }
    return cf;
}

/// Laplacian spectrum of S1 *s S2 for r1-regular S1 and either
///  - S2 r2-regular and r3-net-regular (row sums of L2 equal c = r2 - r3), or
///  - S2 connected and balanced with zero Laplacian row sums (c = 0).
/// Emits lambda_j(S2) + r1 with multiplicity n1 for all but one copy of c,
/// and for every lambda of S1 the roots of
///   t^2 - beta t + ((lambda + r1 n2)(r1 + c) - n2 (lambda - r1)^2),
///   beta = r1 + c + lambda + r1 n2.
inline ClosedFormSpectrum closed_form_laplacian(const SignedGraph& s1, const SignedGraph& s2,
                                                double tol = default_cluster_tol) {
    const auto r1 = regularity(s1);
    if (!r1) throw Error(ErrorCode::NotRegular, "S1 must be regular");
    if (s2.order() == 0) throw Error(ErrorCode::HypothesisNotMet, "S2 must have at least one vertex");

    const bool all_positive =
        std::all_of(s2.edges().begin(), s2.edges().end(), [](const SignedEdge& e) { return e.sign == Sign::Positive; });
    const auto r2 = regularity(s2);
    const auto r3 = net_regularity(s2);
    ClosedFormSpectrum cf;
    double c = 0.0;
    if (all_positive && is_connected(s2)) {
        cf.theorem = "3.4";
    } else if (r2 && r3) {
        cf.theorem = "3.3";
        c = *r2 - *r3;
    } else if (is_connected(s2) && is_balanced(s2)) {
        // Balanced with negative edges: L2 j != 0, so the coronal of L2 is not
        // n2 / t and the row-sum closed form does not apply.
        throw Error(ErrorCode::NonZeroRowSum,
                    "S2 is connected and balanced but has negative edges; its Laplacian rows do not sum to 0");
    } else {
        throw Error(ErrorCode::NotRegular,
                    "S2 must be regular and net-regular, or connected with zero Laplacian row sums");
    }

    const double n2 = static_cast<double>(s2.order());
    const double rr = *r1;
    const auto rest = detail::exclude_one(numeric_spectrum(s2, MatrixKind::Laplacian, tol), c, tol,
                                          ErrorCode::RowSumEigenvalueMissing, "Laplacian row sum");
    detail::add_inherited(cf, rest, rr, s1.order());
    const auto factor_spectrum = numeric_spectrum(s1, MatrixKind::Laplacian, tol);
    for (const auto& e : factor_spectrum.entries()) {
        const double lam = e.value;
        const double beta = rr + c + lam + rr * n2;
        const double c0 = (lam + rr * n2) * (rr + c) - n2 * (lam - rr) * (lam - rr);
        detail::add_poly(cf, {c0, -beta, 1.0}, e.multiplicity);
    }
    return cf;
}

/// Net Laplacian spectrum of S1 *s S2 for r-net-regular S1 with r != 0 and
/// any S2: v_j(S2) + r with multiplicity n1 for all but one copy of 0, and
/// for every v of S1 the roots of
///   t^2 - (v + (n2 + 1) r) t + v ((2 n2 + 1) r - n2 v).
inline ClosedFormSpectrum closed_form_netlaplacian(const SignedGraph& s1, const SignedGraph& s2,
                                                   double tol = default_cluster_tol) {
    const auto r = net_regularity(s1);
    if (!r) throw Error(ErrorCode::NotNetRegular, "S1 must be net-regular");
    if (*r == 0) {
        throw Error(ErrorCode::ZeroNetDegree, "S1 has net degree 0; use the numeric spectrum instead");
    }
    if (s2.order() == 0) throw Error(ErrorCode::HypothesisNotMet, "S2 must have at least one vertex");
    const double n2 = static_cast<double>(s2.order());
    const double rr = *r;

    ClosedFormSpectrum cf{"4.2", {}};
    const auto rest = detail::exclude_one(numeric_spectrum(s2, MatrixKind::NetLaplacian, tol), 0.0, tol,
                                          ErrorCode::RowSumEigenvalueMissing, "net Laplacian row sum");
    detail::add_inherited(cf, rest, rr, s1.order());
    const auto factor_spectrum = numeric_spectrum(s1, MatrixKind::NetLaplacian, tol);
    for (const auto& e : factor_spectrum.entries()) {
        const double v = e.value;
        detail::add_poly(cf, {v * ((2.0 * n2 + 1.0) * rr - n2 * v), -(v + (n2 + 1.0) * rr), 1.0}, e.multiplicity);
    }
    return cf;
}

/// Every eigenvalue described by `cf`, unclustered and ascending.
inline std::vector<double> realize_values(const ClosedFormSpectrum& cf) {
    std::vector<double> out;
    for (const auto& e : cf.entries) {
        if (e.kind == ClosedFormEntry::Kind::Inherited) {
            out.insert(out.end(), e.multiplicity, e.value);
            continue;
        }
        if (e.coeffs.size() == 3) {
            for (double x : real_roots_quadratic(e.coeffs[1], e.coeffs[0])) out.insert(out.end(), e.multiplicity, x);
        } else if (e.coeffs.size() == 4) {
            for (double x : real_roots_cubic(e.coeffs[2], e.coeffs[1], e.coeffs[0]))
                out.insert(out.end(), e.multiplicity, x);
        } else {
            throw Error(ErrorCode::HypothesisNotMet, "closed-form entry of unsupported degree");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline SpectrumMultiset realize(const ClosedFormSpectrum& cf, double tol = default_cluster_tol) {
    return cluster(realize_values(cf), tol);
}

struct BipartiteShape {
    std::size_t p = 0, q = 0;
    Sign sign = Sign::Positive;
};

/// (p, q, sign) when S is a complete bipartite graph K_{p,q} with all edges
/// of one sign; the part containing vertex 0 is counted as p.
inline std::optional<BipartiteShape> complete_bipartite_shape(const SignedGraph& s) {
    if (s.size() == 0 || !is_connected(s)) return std::nullopt;
    const Sign sign = s.edges().front().sign;
    for (const auto& e : s.edges())
        if (e.sign != sign) return std::nullopt;
    std::vector<int> side(s.order(), -1);
    side[0] = 0;
    std::vector<Vertex> queue{0};
    const auto adj = s.neighbours();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (const auto& [w, edge_sign] : adj[v]) {
            if (side[w] < 0) {
                side[w] = 1 - side[v];
                queue.push_back(w);
            } else if (side[w] == side[v]) {
                return std::nullopt;
            }
        }
    }
    const auto p = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
    const std::size_t q = s.order() - p;
    if (s.size() != p * q) return std::nullopt;
    return BipartiteShape{p, q, sign};
}

/// The closed form that applies to S1 *s S2 for `kind`:
///   adj     S2 net-regular, else S2 a uniformly signed K_{p,q}
///   lap     see closed_form_laplacian
///   netlap  see closed_form_netlaplacian
/// Throws the hypothesis error of the last candidate when none applies.
inline ClosedFormSpectrum closed_form_for(const SignedGraph& s1, const SignedGraph& s2, MatrixKind kind,
                                          double tol = default_cluster_tol) {
    switch (kind) {
        case MatrixKind::Adjacency:
            if (!net_regularity(s2)) {
                if (const auto kpq = complete_bipartite_shape(s2))
                    return closed_form_adjacency_kpq(s1, kpq->p, kpq->q, kpq->sign, KpqVariant::Derived, tol);
            }
            return closed_form_adjacency(s1, s2, tol);
        case MatrixKind::Laplacian: return closed_form_laplacian(s1, s2, tol);
        case MatrixKind::NetLaplacian: return closed_form_netlaplacian(s1, s2, tol);
    }
    throw Error(ErrorCode::HypothesisNotMet, "unknown matrix kind");
}

/// Largest gap between two ascending eigenvalue lists; infinity when their
/// lengths differ.
inline double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return INFINITY;
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline nlohmann::json to_json(const SpectrumMultiset& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : s.entries()) out.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
    return out;
}

inline nlohmann::json to_json(const ClosedFormSpectrum& cf) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : cf.entries) {
        nlohmann::json j;
        if (e.kind == ClosedFormEntry::Kind::Inherited) {
            j["kind"] = "inherited";
            j["value"] = e.value;
        } else {
            j["kind"] = "poly";
            j["coeffs"] = e.coeffs;
        }
        j["multiplicity"] = e.multiplicity;
        j["theorem"] = cf.theorem;
        entries.push_back(std::move(j));
    }
    return {{"theorem", cf.theorem}, {"order", cf.total()}, {"entries", std::move(entries)}};
}

inline ClosedFormSpectrum closed_form_from_json(const nlohmann::json& j) {
    ClosedFormSpectrum cf;
    cf.theorem = j.at("theorem").get<std::string>();
    for (const auto& je : j.at("entries")) {
        ClosedFormEntry e;
        const auto kind = je.at("kind").get<std::string>();
        if (kind == "inherited") {
            e.kind = ClosedFormEntry::Kind::Inherited;
            e.value = je.at("value").get<double>();
        } else if (kind == "poly") {
            e.kind = ClosedFormEntry::Kind::Poly;
            e.coeffs = je.at("coeffs").get<std::vector<double>>();
        } else {
            throw Error(ErrorCode::ParseError, "unknown closed-form entry kind '" + kind + "'");
        }
        e.multiplicity = je.at("multiplicity").get<std::size_t>();
        cf.entries.push_back(std::move(e));
    }
    return cf;
}

}  // namespace sncorona
