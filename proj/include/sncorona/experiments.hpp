// experiments.hpp - distinct-eigenvalue counts, few-eigenvalue corona
// constructions, cospectral non-isomorphic corona pairs, and the
// C4^- *s (K2,+) worked example.
#pragma once

#include <sncorona/charpoly.hpp>
#include <sncorona/eigen.hpp>
#include <sncorona/families.hpp>
#include <sncorona/graph_io.hpp>
#include <sncorona/isomorphism.hpp>
#include <sncorona/spectra.hpp>

#include <json.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sncorona {

struct DistinctReport {
    MatrixKind kind = MatrixKind::Adjacency;
    std::size_t distinct_count = 0;
    std::vector<double> values;
    std::optional<std::size_t> t1, t2;
    std::optional<std::size_t> bound;  // 2 t1 + t2, when the hypotheses hold
    std::string construction;

    bool within_bound() const { return !bound || distinct_count <= *bound; }
};

inline DistinctReport distinct_count(const SignedGraph& s, MatrixKind kind, double tol = default_cluster_tol) {
    DistinctReport r;
    r.kind = kind;
    const auto spec = numeric_spectrum(s, kind, tol);
    r.distinct_count = spec.distinct();
    for (const auto& e : spec.entries()) r.values.push_back(e.value);
    r.construction = "graph on " + std::to_string(s.order()) + " vertices, " + std::to_string(s.size()) + " edges";
    return r;
}

/// Hypotheses under which the corona has at most 2 t1 + t2 distinct
/// eigenvalues of the given kind:
///   adj     S2 net-regular
///   lap     S1 regular, S2 regular and net-regular
///   netlap  S1 net-regular
inline bool distinct_bound_applies(const SignedGraph& s1, const SignedGraph& s2, MatrixKind kind) {
    if (s1.order() == 0 || s2.order() == 0) return false;
    switch (kind) {
        case MatrixKind::Adjacency: return net_regularity(s2).has_value();
        case MatrixKind::Laplacian:
            return regularity(s1).has_value() && regularity(s2).has_value() && net_regularity(s2).has_value();
        case MatrixKind::NetLaplacian: return net_regularity(s1).has_value();
    }
    return false;
}

/// Distinct count of S1 *s S2, recording t1, t2 and the bound when
/// distinct_bound_applies.
inline DistinctReport distinct_count_corona(const SignedGraph& s1, const SignedGraph& s2, MatrixKind kind,
                                            double tol = default_cluster_tol) {
    DistinctReport r = distinct_count(s_neighbourhood_corona(s1, s2), kind, tol);
    r.construction = "S1 (" + std::to_string(s1.order()) + " vertices) *s S2 (" + std::to_string(s2.order()) +
                     " vertices)";
    if (distinct_bound_applies(s1, s2, kind)) {
        r.t1 = numeric_spectrum(s1, kind, tol).distinct();
        r.t2 = numeric_spectrum(s2, kind, tol).distinct();
        r.bound = 2 * *r.t1 + *r.t2;
    }
    return r;
}

enum class Companion { K1, K2 };

struct FewDistinctResult {
    SignedGraph corona;
    DistinctReport report;
    std::size_t expected = 0;  // 4 for K1, 5 for K2

    bool matches() const { return report.distinct_count == expected; }
};

/// S *s (K1, sign) or S *s (K2, sign) for S with exactly two distinct
/// adjacency eigenvalues; the report carries the observed count, which is
/// expected to be 4 (K1) or 5 (K2). A mismatch is reported, not thrown.
inline FewDistinctResult few_distinct_construct(const SignedGraph& s, Companion companion, Sign sign,
                                                double tol = default_cluster_tol) {
    if (s.order() < 2) throw Error(ErrorCode::HypothesisNotMet, "need at least 2 vertices");
    const auto seed_spec = numeric_spectrum(s, MatrixKind::Adjacency, tol);
    if (seed_spec.distinct() != 2) {
        throw Error(ErrorCode::HypothesisNotMet,
                    "seed has " + std::to_string(seed_spec.distinct()) + " distinct adjacency eigenvalues, need 2");
    }
    const SignedGraph other = companion == Companion::K1 ? families::edgeless(1) : families::complete(2, sign);
    FewDistinctResult out{s_neighbourhood_corona(s, other), {}, companion == Companion::K1 ? 4U : 5U};
    out.report = distinct_count_corona(s, other, MatrixKind::Adjacency, tol);
    out.report.construction = std::string("seed *s (") + (companion == Companion::K1 ? "K1" : "K2") + "," +
                              (sign == Sign::Positive ? "+" : "-") + ")";
    return out;
}

/// Signed graphs with exactly two distinct adjacency eigenvalues.
inline std::vector<std::pair<std::string, SignedGraph>> two_distinct_catalog() {
    return {{"C4^- (unbalanced 4-cycle)", families::unbalanced_c4()},
            {"(K2,+)", families::complete(2)},
            {"(K3,+)", families::complete(3)},
            {"(K4,+)", families::complete(4)}};
}

struct CospectralCertificate {
    MatrixKind kind = MatrixKind::Adjacency;
    SignedGraph corona1, corona2;
    Polynomial poly1, poly2;
    bool isomorphic = true;
    std::optional<bool> switching_isomorphic;

    bool polynomials_equal() const { return poly1 == poly2; }
    bool certified() const { return polynomials_equal() && !isomorphic; }
};

/// Certifies that S1 *s S and S2 *s S share the exact characteristic
/// polynomial of `kind` and are not isomorphic. S1 and S2 must be
/// cospectral (checked exactly) and non-isomorphic (brute force).
inline CospectralCertificate cospectral_demo(const SignedGraph& s1, const SignedGraph& s2, const SignedGraph& s,
                                             MatrixKind kind, std::size_t cap = default_isomorphism_cap) {
    if (char_poly_exact(matrix_of(s1, kind)) != char_poly_exact(matrix_of(s2, kind))) {
        throw Error(ErrorCode::InputsNotCospectral,
                    "factors are not " + std::string(to_string(kind)) + "-cospectral");
    }
    if (is_isomorphic(s1, s2, cap)) throw Error(ErrorCode::InputsIsomorphic, "factors are isomorphic");
    CospectralCertificate c;
    c.kind = kind;
    c.corona1 = s_neighbourhood_corona(s1, s);
    c.corona2 = s_neighbourhood_corona(s2, s);
    if (c.corona1.order() > cap) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    "coronas have " + std::to_string(c.corona1.order()) + " vertices, cap is " + std::to_string(cap));
    }
    c.poly1 = char_poly_exact(matrix_of(c.corona1, kind));
    c.poly2 = char_poly_exact(matrix_of(c.corona2, kind));
    c.isomorphic = is_isomorphic(c.corona1, c.corona2, cap);
    c.switching_isomorphic = is_switching_isomorphic(c.corona1, c.corona2, cap);
    return c;
}

/// Default cospectral seed: all-positive K_{1,4} and C4 + K1, companion K1.
struct CospectralSeed {
    SignedGraph s1, s2, companion;
};

inline CospectralSeed default_cospectral_seed() {
    return {families::star(4), disjoint_union(families::cycle(4), families::edgeless(1)), families::edgeless(1)};
}

struct PrintedValueCheck {
    std::string label;
    double value = 0.0;
    std::size_t printed_multiplicity = 0;
    std::size_t observed_multiplicity = 0;

    bool reproduced() const { return printed_multiplicity == observed_multiplicity; }
};

struct PaperExampleReport {
    SignedGraph corona;
    Polynomial charpoly;
    std::vector<double> numeric;       // raw, ascending
    std::vector<double> closed_form;   // raw, ascending, from the net-regular adjacency closed form
    double closed_vs_numeric = 0.0;    // max gap
    double max_charpoly_residual = 0.0;  // max |psi(lambda)| / (1 + |lambda|)^n over numeric lambda
    std::size_t distinct = 0;
    std::vector<PrintedValueCheck> printed;

    bool consistent(double tol = 1e-6) const {
        return closed_vs_numeric < tol && max_charpoly_residual < tol;
    }
};

/// C4^- *s (K2,+) checked three ways, plus a per-value comparison against
/// the printed multiset {-1^4, ((3 +- sqrt 33)/2)^2, ((-1 +- sqrt 41)/2)^2}.
inline PaperExampleReport paper_example(double tol = default_cluster_tol) {
    const SignedGraph c4 = families::unbalanced_c4();
    const SignedGraph k2 = families::complete(2);
    PaperExampleReport r;
    r.corona = s_neighbourhood_corona(c4, k2);
    const IntMatrix a = matrix_of(r.corona, MatrixKind::Adjacency);
    r.charpoly = char_poly_exact(a);
    r.numeric = jacobi_eigenvalues(to_real(a));
    r.closed_form = realize_values(closed_form_adjacency(c4, k2, tol));
    r.closed_vs_numeric = max_gap(r.closed_form, r.numeric);
    const double n = static_cast<double>(r.numeric.size());
    for (double x : r.numeric) {
        r.max_charpoly_residual =
            std::max(r.max_charpoly_residual, std::abs(r.charpoly.eval(x)) / std::pow(1.0 + std::abs(x), n));
    }
    const auto spec = cluster(r.numeric, tol);
    r.distinct = spec.distinct();
    const double s33 = std::sqrt(33.0), s41 = std::sqrt(41.0);
    r.printed = {{"-1", -1.0, 4, 0},
                 {"(3+sqrt33)/2", (3.0 + s33) / 2.0, 2, 0},
                 {"(3-sqrt33)/2", (3.0 - s33) / 2.0, 2, 0},
                 {"(-1+sqrt41)/2", (-1.0 + s41) / 2.0, 2, 0},
                 {"(-1-sqrt41)/2", (-1.0 - s41) / 2.0, 2, 0}};
    for (auto& p : r.printed) p.observed_multiplicity = spec.multiplicity_of(p.value, tol);
    return r;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const DistinctReport& r) {
    nlohmann::json j{{"kind", std::string(to_string(r.kind))},
                     {"distinct_count", r.distinct_count},
                     {"values", r.values},
                     {"construction", r.construction}};
    j["t1"] = r.t1 ? nlohmann::json(*r.t1) : nlohmann::json(nullptr);
    j["t2"] = r.t2 ? nlohmann::json(*r.t2) : nlohmann::json(nullptr);
    j["bound"] = r.bound ? nlohmann::json(*r.bound) : nlohmann::json(nullptr);
    j["within_bound"] = r.within_bound();
    return j;
}

inline nlohmann::json to_json(const CospectralCertificate& c) {
    return {{"kind", std::string(to_string(c.kind))},
            {"corona1", format_graph(c.corona1)},
            {"corona2", format_graph(c.corona2)},
            {"charpoly1", to_string(c.poly1)},
            {"charpoly2", to_string(c.poly2)},
            {"polynomials_equal", c.polynomials_equal()},
            {"isomorphic", c.isomorphic},
            {"switching_isomorphic",
             c.switching_isomorphic ? nlohmann::json(*c.switching_isomorphic) : nlohmann::json(nullptr)},
            {"certified", c.certified()}};
}

inline nlohmann::json to_json(const PaperExampleReport& r) {
    nlohmann::json printed = nlohmann::json::array();
    for (const auto& p : r.printed) {
        printed.push_back({{"label", p.label},
                           {"value", p.value},
                           {"printed_multiplicity", p.printed_multiplicity},
                           {"observed_multiplicity", p.observed_multiplicity},
                           {"reproduced", p.reproduced()}});
    }
    return {{"graph", "C4^- *s (K2,+)"},
            {"order", r.corona.order()},
            {"charpoly", to_string(r.charpoly)},
            {"numeric", r.numeric},
            {"closed_form", r.closed_form},
            {"closed_vs_numeric", r.closed_vs_numeric},
            {"max_charpoly_residual", r.max_charpoly_residual},
            {"distinct", r.distinct},
            {"consistent", r.consistent()},
            {"printed", printed}};
}

}  // namespace sncorona
