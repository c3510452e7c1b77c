// verify.hpp - randomized checks of the corona spectrum results against the
// numeric and exact oracles. Each trial draws its own RNG from (seed, trial)
// so results do not depend on scheduling.
#pragma once

#include <sncorona/charpoly.hpp>
#include <sncorona/experiments.hpp>
#include <sncorona/generators.hpp>
#include <sncorona/graph_io.hpp>
#include <sncorona/spectra.hpp>

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace sncorona {

inline const std::vector<std::string>& verifiable_theorems() {
    static const std::vector<std::string> ids{"2.2", "2.3", "2.4", "2.5", "3.3", "3.4", "4.2", "5.1", "5.2"};
    return ids;
}

struct VerifyOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::size_t max_n = 5;
    double tol = default_cluster_tol;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct TrialFailure {
    std::size_t trial = 0;
    std::string s1, s2;  // edge-list text
    std::string detail;
};

struct VerifyReport {
    std::string theorem;
    VerifyOptions options;
    std::size_t passed = 0;
    std::vector<TrialFailure> failures;

    bool ok() const { return failures.empty() && passed == options.trials; }
};

/// Seed of trial i: splitmix64 of the run seed mixed with i.
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial) + 1);
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

namespace detail {

struct TrialOutcome {
    bool pass = false;
    SignedGraph s1, s2;
    std::string detail;
};

inline std::string fmt_gap(double g) {
    std::ostringstream o;
    o << "max |closed - numeric| = " << g;
    return o.str();
}

inline TrialOutcome compare_closed(const SignedGraph& s1, const SignedGraph& s2, const ClosedFormSpectrum& cf,
                                   MatrixKind kind, double tol) {
    const auto numeric = numeric_eigenvalues(s_neighbourhood_corona(s1, s2), kind);
    const double gap = max_gap(realize_values(cf), numeric);
    return {gap < tol, s1, s2, "theorem " + cf.theorem + ": " + fmt_gap(gap)};
}

inline Rational random_rational(gen::Rng& rng) {
    const auto num = static_cast<long long>(gen::uniform(rng, 0, 40)) - 20;
    const auto den = static_cast<long long>(gen::uniform(rng, 1, 7));
    return Rational(num, den);
}

inline TrialOutcome trial_2_2(gen::Rng& rng, const VerifyOptions& o) {
    const auto s1 = gen::random_signed(rng, gen::uniform(rng, 1, o.max_n));
    const auto s2 = gen::random_signed(rng, gen::uniform(rng, 1, o.max_n));
    const IntMatrix a = matrix_of(s_neighbourhood_corona(s1, s2), MatrixKind::Adjacency);
    const Polynomial psi2 = char_poly_exact(adjacency_matrix(s2));
    for (int k = 0; k < 5; ++k) {
        Rational t0 = random_rational(rng);
        while (psi2(t0) == 0) t0 = random_rational(rng);
        const Rational lhs = corona_adjacency_charpoly_eval(s1, s2, t0);
        const Rational rhs = det_exact_at(a, t0);
        if (lhs != rhs) {
            return {false, s1, s2, "t0 = " + to_string(t0) + ": factored " + to_string(lhs) + " != direct " +
                                       to_string(rhs)};
        }
    }
    return {true, s1, s2, {}};
}

inline TrialOutcome trial_2_3(gen::Rng& rng, const VerifyOptions& o) {
    const auto s1 = gen::random_signed(rng, gen::uniform(rng, 1, o.max_n));
    const auto s2 = gen::random_net_regular(rng, o.max_n);
    return compare_closed(s1, s2, closed_form_adjacency(s1, s2, o.tol), MatrixKind::Adjacency, o.tol);
}

inline TrialOutcome trial_kpq(gen::Rng& rng, const VerifyOptions& o, Sign sign) {
    const auto s = gen::random_signed(rng, gen::uniform(rng, 1, o.max_n));
    const std::size_t p = gen::uniform(rng, 1, 3);
    const std::size_t q = gen::uniform(rng, 1, 3);
    const auto kpq = families::complete_bipartite(p, q, sign);
    auto out = compare_closed(s, kpq, closed_form_adjacency_kpq(s, p, q, sign, KpqVariant::Derived, o.tol),
                              MatrixKind::Adjacency, o.tol);
    out.detail += " (p = " + std::to_string(p) + ", q = " + std::to_string(q) + ")";
    return out;
}

inline TrialOutcome trial_3_3(gen::Rng& rng, const VerifyOptions& o) {
    const auto s1 = gen::random_regular_signed(rng, gen::uniform(rng, 1, o.max_n));
    const auto s2 = gen::random_net_regular(rng, o.max_n);
    return compare_closed(s1, s2, closed_form_laplacian(s1, s2, o.tol), MatrixKind::Laplacian, o.tol);
}

inline TrialOutcome trial_3_4(gen::Rng& rng, const VerifyOptions& o) {
    const auto s1 = gen::random_regular_signed(rng, gen::uniform(rng, 1, o.max_n));
    const auto s2 = gen::random_connected(rng, gen::uniform(rng, 1, o.max_n));
    return compare_closed(s1, s2, closed_form_laplacian(s1, s2, o.tol), MatrixKind::Laplacian, o.tol);
}

inline TrialOutcome trial_4_2(gen::Rng& rng, const VerifyOptions& o) {
    const auto s1 = gen::random_net_regular(rng, o.max_n, true);
    const auto s2 = gen::random_signed(rng, gen::uniform(rng, 1, o.max_n));
    return compare_closed(s1, s2, closed_form_netlaplacian(s1, s2, o.tol), MatrixKind::NetLaplacian, o.tol);
}

inline TrialOutcome trial_5_1(gen::Rng& rng, const VerifyOptions& o) {
    const auto kind = static_cast<MatrixKind>(gen::uniform(rng, 0, 2));
    SignedGraph s1, s2;
    switch (kind) {
        case MatrixKind::Adjacency:
            s1 = gen::random_signed(rng, gen::uniform(rng, 1, o.max_n));
            s2 = gen::random_net_regular(rng, o.max_n);
            break;
        case MatrixKind::Laplacian:
            s1 = gen::random_regular_signed(rng, gen::uniform(rng, 1, o.max_n));
            s2 = gen::random_net_regular(rng, o.max_n);
            break;
        case MatrixKind::NetLaplacian:
            s1 = gen::random_net_regular(rng, o.max_n);
            s2 = gen::random_signed(rng, gen::uniform(rng, 1, o.max_n));
            break;
    }
    const auto r = distinct_count_corona(s1, s2, kind, o.tol);
    std::string detail = std::string(to_string(kind)) + ": " + std::to_string(r.distinct_count) + " distinct";
    if (!r.bound) return {false, s1, s2, detail + ", hypotheses not met by generator"};
    return {r.within_bound(), s1, s2, detail + ", bound " + std::to_string(*r.bound)};
}

inline TrialOutcome trial_5_2(gen::Rng& rng, const VerifyOptions& o) {
    // Two distinct eigenvalues: C4^-, (K_n,+) and (K_n,-), switched at random.
    SignedGraph seed;
    const std::size_t top = std::max<std::size_t>(2, std::min<std::size_t>(o.max_n, 6));
    switch (gen::uniform(rng, 0, 2)) {
        case 0: seed = families::unbalanced_c4(); break;
        case 1: seed = families::complete(gen::uniform(rng, 2, top), Sign::Positive); break;
        default: seed = families::complete(gen::uniform(rng, 2, top), Sign::Negative); break;
    }
    seed = switch_graph(seed, gen::random_switch_set(rng, seed.order()));
    const auto companion = gen::coin(rng) ? Companion::K1 : Companion::K2;
    const auto sign = gen::coin(rng) ? Sign::Positive : Sign::Negative;
    const auto r = few_distinct_construct(seed, companion, sign, o.tol);
    const SignedGraph other = companion == Companion::K1 ? families::edgeless(1) : families::complete(2, sign);
    return {r.matches(), seed, other,
            r.report.construction + ": " + std::to_string(r.report.distinct_count) + " distinct, expected " +
                std::to_string(r.expected)};
}

inline std::function<TrialOutcome(gen::Rng&, const VerifyOptions&)> trial_for(const std::string& theorem) {
    if (theorem == "2.2") return trial_2_2;
    if (theorem == "2.3") return trial_2_3;
    if (theorem == "2.4") return [](gen::Rng& r, const VerifyOptions& o) { return trial_kpq(r, o, Sign::Negative); };
    if (theorem == "2.5") return [](gen::Rng& r, const VerifyOptions& o) { return trial_kpq(r, o, Sign::Positive); };
    if (theorem == "3.3") return trial_3_3;
    if (theorem == "3.4") return trial_3_4;
    if (theorem == "4.2") return trial_4_2;
    if (theorem == "5.1") return trial_5_1;
    if (theorem == "5.2") return trial_5_2;
    return {};
}

}  // namespace detail

/// Runs `options.trials` randomized checks of `theorem` (one of
/// verifiable_theorems()). Trials are spread over worker threads; results
/// are collected in trial order.
inline VerifyReport verify_theorem(const std::string& theorem, const VerifyOptions& options) {
    auto trial = detail::trial_for(theorem);
    if (!trial) throw Error(ErrorCode::HypothesisNotMet, "unknown theorem '" + theorem + "'");

    std::vector<std::optional<detail::TrialOutcome>> outcomes(options.trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < options.trials; i = next++) {
            gen::Rng rng(trial_seed(options.seed, i));
            try {
                outcomes[i] = trial(rng, options);
            } catch (const std::exception& e) {
                outcomes[i] = detail::TrialOutcome{false, {}, {}, std::string("exception: ") + e.what()};
            }
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(options.trials, 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    VerifyReport report{theorem, options, 0, {}};
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& out = *outcomes[i];
        if (out.pass) {
            ++report.passed;
        } else {
            report.failures.push_back({i, format_graph(out.s1), format_graph(out.s2), out.detail});
        }
    }
    return report;
}

/// "PASS 100/100" or "FAIL k/N" followed by one reproducible dump per
/// failing trial.
inline std::string format_report(const VerifyReport& r) {
    std::ostringstream out;
    out << (r.ok() ? "PASS " : "FAIL ") << r.passed << '/' << r.options.trials << '\n';
    for (const auto& f : r.failures) {
        out << "--- theorem " << r.theorem << " trial " << f.trial << " (seed " << r.options.seed << ", max-n "
            << r.options.max_n << ")\n"
            << f.detail << '\n'
            << "# S1\n"
            << f.s1 << "# S2\n"
            << f.s2;
    }
    return out.str();
}

inline nlohmann::json to_json(const VerifyReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"trial", f.trial}, {"s1", f.s1}, {"s2", f.s2}, {"detail", f.detail}});
    return {{"theorem", r.theorem}, {"trials", r.options.trials}, {"seed", r.options.seed},
            {"max_n", r.options.max_n}, {"passed", r.passed},          {"ok", r.ok()},
            {"failures", failures}};
}

}  // namespace sncorona
