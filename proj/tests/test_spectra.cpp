#include <sncorona/families.hpp>
#include <sncorona/generators.hpp>
#include <sncorona/spectra.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace sncorona;

namespace {

void expect_values(const std::vector<double>& got, const std::vector<double>& want, double tol = 1e-8) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
}

double gap_to_numeric(const SignedGraph& s1, const SignedGraph& s2, const ClosedFormSpectrum& cf, MatrixKind kind) {
    return max_gap(realize_values(cf), numeric_eigenvalues(s_neighbourhood_corona(s1, s2), kind));
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::HypothesisNotMet;
}

const SignedGraph k2 = families::complete(2);
const SignedGraph k3 = families::complete(3);
const SignedGraph c4m = families::unbalanced_c4();
const SignedGraph k12m = families::complete_bipartite(1, 2, Sign::Negative);

}  // namespace

// ---------------------------------------------------------------------------
// Matrices of a signed graph

TEST(Matrices, UnbalancedFourCycle) {
    EXPECT_EQ(matrix_of(c4m, MatrixKind::Adjacency),
              (IntMatrix{{0, 1, 0, -1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {-1, 0, 1, 0}}));
    EXPECT_EQ(matrix_of(c4m, MatrixKind::Laplacian),
              (IntMatrix{{2, -1, 0, 1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {1, 0, -1, 2}}));
    EXPECT_EQ(matrix_of(c4m, MatrixKind::NetLaplacian),
              (IntMatrix{{0, -1, 0, 1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {1, 0, -1, 0}}));
}

TEST(Matrices, RowSums) {
    // L j = 2 d^-, N j = 0.
    gen::Rng rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = gen::random_signed(rng, gen::uniform(rng, 1, 7));
        const auto l = matrix_of(s, MatrixKind::Laplacian);
        const auto n = matrix_of(s, MatrixKind::NetLaplacian);
        const auto d = degrees(s);
        for (std::size_t i = 0; i < s.order(); ++i) {
            Integer lsum = 0, nsum = 0;
            for (std::size_t j = 0; j < s.order(); ++j) {
                lsum += l(i, j);
                nsum += n(i, j);
            }
            EXPECT_EQ(lsum, 2 * d[i].negative);
            EXPECT_EQ(nsum, 0);
        }
    }
}

TEST(Matrices, KindNames) {
    for (auto k : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NetLaplacian})
        EXPECT_EQ(parse_matrix_kind(to_string(k)), k);
    EXPECT_EQ(parse_matrix_kind("net-laplacian"), MatrixKind::NetLaplacian);
    EXPECT_FALSE(parse_matrix_kind("signless").has_value());
}

// ---------------------------------------------------------------------------
// Block form of the corona matrices

TEST(BlockAssembly, MatchesDirectConstructionForEveryKind) {
    gen::Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const auto s1 = gen::random_signed(rng, gen::uniform(rng, 1, 5));
        const auto s2 = gen::random_signed(rng, gen::uniform(rng, 1, 4));
        const auto perm = corona_block_permutation(s1.order(), s2.order());
        const auto c = s_neighbourhood_corona(s1, s2);
        for (auto kind : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NetLaplacian}) {
            EXPECT_EQ(permute_symmetric(matrix_of(c, kind), perm), assemble_corona_blocks(s1, s2, kind))
                << to_string(kind);
        }
    }
}

TEST(BlockAssembly, PermutationIsABijection) {
    const auto perm = corona_block_permutation(3, 2);
    EXPECT_EQ(perm, (std::vector<std::size_t>{0, 1, 2, 3, 6, 4, 7, 5, 8}));
}

// ---------------------------------------------------------------------------
// Adjacency characteristic polynomial factorization

TEST(AdjacencyFactorization, ExampleValue) {
    // det(I/3 - A) of K2 *s (K_{1,2}, -), computed independently.
    EXPECT_EQ(corona_adjacency_charpoly_eval(k2, k12m, Rational(1, 3)), Rational(1495, 6561));
}

TEST(AdjacencyFactorization, RefusesPolesOfTheCoronal) {
    // 1 is an adjacency eigenvalue of (K2,+).
    EXPECT_EQ(code_of([] { corona_adjacency_charpoly_eval(c4m, k2, Rational(1)); }),
              ErrorCode::PoleAtEvaluationPoint);
}

TEST(AdjacencyFactorization, AgreesWithDirectDeterminant) {
    gen::Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const auto s1 = gen::random_signed(rng, gen::uniform(rng, 1, 4));
        const auto s2 = gen::random_signed(rng, gen::uniform(rng, 1, 4));
        const auto a = matrix_of(s_neighbourhood_corona(s1, s2), MatrixKind::Adjacency);
        const Rational t0(static_cast<long long>(gen::uniform(rng, 0, 40)) - 20, 11);
        EXPECT_EQ(corona_adjacency_charpoly_eval(s1, s2, t0), det_exact_at(a, t0));
    }
}

// ---------------------------------------------------------------------------
// Closed forms: worked examples (expected values from an independent
// floating-point eigensolver)

TEST(ClosedForm, AdjacencyNetRegularCompanion) {
    const auto cf = closed_form_adjacency(c4m, k2);
    EXPECT_EQ(cf.theorem, "2.3");
    EXPECT_EQ(cf.total(), 12U);
    expect_values(realize_values(cf), {-2.5431518966, -2.5431518966, -1, -1, -1, -1, -0.8035879293, -0.8035879293,
                                       2.1289383342, 2.1289383342, 3.2178014917, 3.2178014917},
                  1e-9);
}

TEST(ClosedForm, AdjacencyNegativeCompleteBipartiteCompanion) {
    const auto cf = closed_form_adjacency_kpq(k3, 1, 2, Sign::Negative);
    EXPECT_EQ(cf.theorem, "2.4");
    expect_values(realize_values(cf), {-3.54356975, -2.93543233, -2.93543233, 0, 0, 0, 0.46259842, 0.46259842,
                                       1.34393147, 1.47283391, 1.47283391, 4.19963827},
                  1e-7);
    EXPECT_LT(gap_to_numeric(k3, k12m, cf, MatrixKind::Adjacency), 1e-9);
}

TEST(ClosedForm, PrintedConstantTermDoesNotMatch) {
    // The cubic acquires a complex pair at theta = -1, which no symmetric
    // matrix can have.
    const auto printed = closed_form_adjacency_kpq(k3, 1, 2, Sign::Negative, KpqVariant::Printed);
    EXPECT_EQ(code_of([&] { realize_values(printed); }), ErrorCode::ComplexRootsDetected);
}

TEST(ClosedForm, AdjacencyPositiveCompleteBipartiteCompanion) {
    for (auto [p, q] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 3}}) {
        const auto kpq = families::complete_bipartite(p, q, Sign::Positive);
        const auto cf = closed_form_adjacency_kpq(c4m, p, q, Sign::Positive);
        EXPECT_EQ(cf.theorem, "2.5");
        EXPECT_LT(gap_to_numeric(c4m, kpq, cf, MatrixKind::Adjacency), 1e-9);
    }
}

TEST(ClosedForm, LaplacianZeroRowSumCompanion) {
    const auto cf = closed_form_laplacian(k3, k2);
    EXPECT_EQ(cf.theorem, "3.4");
    expect_values(realize_values(cf), {0, 1.62771868, 1.62771868, 4, 4, 4, 6, 7.37228132, 7.37228132}, 1e-7);
}

TEST(ClosedForm, LaplacianRegularNetRegularCompanion) {
    const auto k3m = families::complete(3, Sign::Negative);
    const auto cf = closed_form_laplacian(c4m, k3m);
    EXPECT_EQ(cf.theorem, "3.3");
    expect_values(realize_values(cf), {3, 3, 3, 3, 3, 3, 3, 3, 3.8259545415, 3.8259545415, 4.721438755, 4.721438755,
                                       8.7598318961, 8.7598318961, 10.6927748073, 10.6927748073},
                  1e-8);
}

TEST(ClosedForm, NetLaplacianExample) {
    const auto cf = closed_form_netlaplacian(k2, k12m);
    EXPECT_EQ(cf.theorem, "4.2");
    expect_values(realize_values(cf), {-2, -2, 0, 0, 0, 0.35424869, 4, 5.64575131}, 1e-7);
}

TEST(ClosedForm, DispatchPicksTheApplicableResult) {
    EXPECT_EQ(closed_form_for(c4m, k2, MatrixKind::Adjacency).theorem, "2.3");
    EXPECT_EQ(closed_form_for(c4m, k12m, MatrixKind::Adjacency).theorem, "2.4");
    EXPECT_EQ(closed_form_for(c4m, families::star(3), MatrixKind::Adjacency).theorem, "2.5");
    // K_{2,2} is net-regular, so the general result applies first.
    EXPECT_EQ(closed_form_for(c4m, families::complete_bipartite(2, 2), MatrixKind::Adjacency).theorem, "2.3");
    EXPECT_EQ(closed_form_for(k3, k2, MatrixKind::Laplacian).theorem, "3.4");
    EXPECT_EQ(closed_form_for(k2, k12m, MatrixKind::NetLaplacian).theorem, "4.2");
    EXPECT_EQ(code_of([] { closed_form_for(c4m, families::path(4), MatrixKind::Adjacency); }),
              ErrorCode::NotNetRegular);
}

TEST(ClosedForm, CompleteBipartiteShapeDetection) {
    const auto shape = complete_bipartite_shape(families::complete_bipartite(2, 3, Sign::Negative));
    ASSERT_TRUE(shape.has_value());
    EXPECT_EQ(shape->p, 2U);
    EXPECT_EQ(shape->q, 3U);
    EXPECT_EQ(shape->sign, Sign::Negative);
    EXPECT_FALSE(complete_bipartite_shape(families::path(4)).has_value());
    EXPECT_FALSE(complete_bipartite_shape(c4m).has_value());
    EXPECT_FALSE(complete_bipartite_shape(families::edgeless(3)).has_value());
}

TEST(ClosedForm, HypothesisErrors) {
    EXPECT_EQ(code_of([] { closed_form_adjacency(k2, families::path(3)); }), ErrorCode::NotNetRegular);
    EXPECT_EQ(code_of([] { closed_form_laplacian(families::path(3), k2); }), ErrorCode::NotRegular);
    EXPECT_EQ(code_of([] { closed_form_laplacian(k2, families::path(4, Sign::Negative)); }),
              ErrorCode::NonZeroRowSum);
    EXPECT_EQ(code_of([] { closed_form_laplacian(k2, disjoint_union(k2, families::path(3))); }),
              ErrorCode::NotRegular);
    EXPECT_EQ(code_of([] { closed_form_netlaplacian(c4m, k2); }), ErrorCode::NotNetRegular);
    EXPECT_EQ(code_of([] { closed_form_netlaplacian(families::alternating_cycle(4), k2); }),
              ErrorCode::ZeroNetDegree);
    EXPECT_EQ(code_of([] { closed_form_adjacency_kpq(k2, 0, 2, Sign::Positive); }), ErrorCode::HypothesisNotMet);
}

TEST(ClosedForm, BalancedCompanionWithNegativeEdgeBreaksTheZeroRowSumForm) {
    // P3 with one negative edge is connected and balanced, but L j != 0. The
    // zero-row-sum closed form depends on S2 only through its Laplacian
    // spectrum, which switching preserves, so its prediction equals the
    // closed form for the all-positive P3 -- and that misses the actual
    // spectrum by about 0.81.
    const auto p3 = from_edge_list(3, {{0, 1, 1}, {1, 2, -1}});
    ASSERT_TRUE(is_balanced(p3));
    const auto literal = closed_form_laplacian(k3, families::path(3));
    EXPECT_EQ(literal.theorem, "3.4");
    EXPECT_NEAR(gap_to_numeric(k3, p3, literal, MatrixKind::Laplacian), 0.8099601859, 1e-8);
    EXPECT_EQ(code_of([&] { closed_form_laplacian(k3, p3); }), ErrorCode::NonZeroRowSum);
}

TEST(ClosedForm, EntryCountsMatchCoronaOrder) {
    gen::Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto s1 = gen::random_signed(rng, gen::uniform(rng, 1, 5));
        const auto s2 = gen::random_net_regular(rng, 5);
        EXPECT_EQ(closed_form_adjacency(s1, s2).total(), s1.order() * (s2.order() + 1));
    }
}

TEST(ClosedForm, JsonRoundTrip) {
    for (const auto& cf : {closed_form_adjacency(c4m, k2), closed_form_adjacency_kpq(k3, 1, 2, Sign::Negative),
                           closed_form_laplacian(k3, k2), closed_form_netlaplacian(k2, k12m)}) {
        const auto j = to_json(cf);
        EXPECT_EQ(j.at("theorem"), cf.theorem);
        EXPECT_EQ(j.at("order"), cf.total());
        for (const auto& e : j.at("entries")) EXPECT_EQ(e.at("theorem"), cf.theorem);
        const auto back = closed_form_from_json(nlohmann::json::parse(j.dump()));
        EXPECT_EQ(back.theorem, cf.theorem);
        EXPECT_EQ(realize_values(back), realize_values(cf));
    }
    EXPECT_THROW(closed_form_from_json(nlohmann::json::parse(
                     R"({"theorem":"2.3","entries":[{"kind":"bogus","multiplicity":1}]})")),
                 Error);
}

// ---------------------------------------------------------------------------
// Switching behaviour

TEST(Switching, AdjacencyAndLaplacianSpectraAreInvariant) {
    gen::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = gen::random_signed(rng, gen::uniform(rng, 1, 8));
        const auto sx = switch_graph(s, gen::random_switch_set(rng, s.order()));
        for (auto kind : {MatrixKind::Adjacency, MatrixKind::Laplacian})
            EXPECT_LT(max_gap(numeric_eigenvalues(s, kind), numeric_eigenvalues(sx, kind)), 1e-8);
    }
}

TEST(Switching, NetLaplacianSpectrumCanChange) {
    // (K2,+) has net Laplacian spectrum {0, 2}; switching one end gives
    // (K2,-) with {-2, 0}.
    const auto sx = switch_graph(k2, SwitchSet{{0}});
    expect_values(numeric_eigenvalues(k2, MatrixKind::NetLaplacian), {0, 2});
    expect_values(numeric_eigenvalues(sx, MatrixKind::NetLaplacian), {-2, 0});
}

TEST(Laplacian, KernelDimensionCountsBalancedComponents) {
    gen::Rng rng(13);
    int balanced_seen = 0, unbalanced_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = gen::random_connected(rng, gen::uniform(rng, 1, 7), 0.4, trial % 2 ? 0.3 : 0.0);
        const auto spec = numeric_spectrum(s, MatrixKind::Laplacian);
        const std::size_t zeros = spec.multiplicity_of(0.0);
        EXPECT_EQ(zeros, is_balanced(s) ? 1U : 0U);
        (is_balanced(s) ? balanced_seen : unbalanced_seen)++;
    }
    EXPECT_GT(balanced_seen, 0);
    EXPECT_GT(unbalanced_seen, 0);
    // Disconnected: one balanced and one unbalanced component.
    const auto g = disjoint_union(families::path(3), c4m);
    EXPECT_EQ(numeric_spectrum(g, MatrixKind::Laplacian).multiplicity_of(0.0), 1U);
}

TEST(Spectrum, JsonForm) {
    const auto j = to_json(numeric_spectrum(c4m, MatrixKind::Adjacency));
    ASSERT_EQ(j.size(), 2U);
    EXPECT_EQ(j[0].at("multiplicity"), 2);
    EXPECT_NEAR(j[1].at("value").get<double>(), std::sqrt(2.0), 1e-12);
}
