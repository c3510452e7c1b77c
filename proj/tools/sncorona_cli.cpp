// sncorona - command-line front end: corona construction, spectra,
// characteristic polynomials, randomized verification and the experiments.
//
// Exit status: 0 success, 1 verification failure, 2 usage / input errors.

#include <sncorona/sncorona.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sncorona;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

const std::vector<std::string> kind_names{"adj", "lap", "netlap", "adjacency", "laplacian", "net-laplacian"};

MatrixKind kind_of(const std::string& name) { return *parse_matrix_kind(name); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string fmt_double(double x) {
    std::ostringstream o;
    o.precision(6);
    o << x;
    return o.str();
}

void print_json(const json& j) { std::cout << j.dump(1) << '\n'; }

SignedGraph load(const std::string& path) {
    try {
        return read_graph(path);
    } catch (const Error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

/// The graph named by one file, or the corona of the two factors named by two.
SignedGraph load_target(const std::vector<std::string>& files) {
    if (files.size() == 1) return load(files[0]);
    return s_neighbourhood_corona(load(files[0]), load(files[1]));
}

// ---------------------------------------------------------------------------

struct CoronaArgs {
    std::string a, b, out;
};

int run_corona(const CoronaArgs& args, bool as_json) {
    const SignedGraph c = s_neighbourhood_corona(load(args.a), load(args.b));
    if (!args.out.empty()) write_graph(c, args.out);
    if (as_json) {
        json j{{"order", c.order()}, {"size", c.size()}};
        if (args.out.empty())
            j["graph"] = format_graph(c);
        else
            j["output"] = args.out;
        print_json(j);
    } else if (args.out.empty()) {
        std::cout << format_graph(c);
    } else {
        std::cout << "wrote " << args.out << " (" << c.order() << " vertices, " << c.size() << " edges)\n";
    }
    return exit_ok;
}

struct SpectrumArgs {
    std::vector<std::string> files;
    std::string kind = "adj";
    bool closed_form = false;
    double tol = default_cluster_tol;
};

int run_spectrum(const SpectrumArgs& args, bool as_json) {
    const MatrixKind kind = kind_of(args.kind);
    std::vector<SignedGraph> factors;
    for (const auto& f : args.files) factors.push_back(load(f));
    const SignedGraph g = factors.size() == 1 ? factors[0] : s_neighbourhood_corona(factors[0], factors[1]);
    const std::vector<double> raw = numeric_eigenvalues(g, kind);
    const SpectrumMultiset spec = cluster(raw, args.tol);

    json j{{"kind", std::string(to_string(kind))}, {"order", g.order()}, {"spectrum", to_json(spec)}};
    std::ostringstream text;
    text << format_spectrum(spec) << '\n';
    int status = exit_ok;

    if (args.closed_form) {
        std::optional<ClosedFormSpectrum> cf;
        std::string why;
        if (factors.size() != 2) {
            why = "closed forms apply to coronas; pass the two factor files";
        } else {
            try {
                cf = closed_form_for(factors[0], factors[1], kind, args.tol);
            } catch (const Error& e) {
                why = e.what();
            }
        }
        if (cf) {
            const double gap = max_gap(realize_values(*cf), raw);
            const bool agree = gap < args.tol;
            if (!agree) status = exit_failed;
            j["closed_form"] = to_json(*cf);
            j["closed_form_spectrum"] = to_json(realize(*cf, args.tol));
            j["max_gap"] = gap;
            j["agreement"] = agree;
            text << "closed form (theorem " << cf->theorem << "): " << format_spectrum(realize(*cf, args.tol))
                 << '\n'
                 << "agreement: " << (agree ? "PASS" : "FAIL") << " (max gap " << fmt_double(gap) << ")\n";
        } else {
            j["closed_form"] = nullptr;
            j["closed_form_note"] = why;
            text << "closed form: not applicable (" << why << ")\n";
        }
    }
    if (as_json)
        print_json(j);
    else
        std::cout << text.str();
    return status;
}

struct CharpolyArgs {
    std::vector<std::string> files;
    std::string kind = "adj";
};

int run_charpoly(const CharpolyArgs& args, bool as_json) {
    const MatrixKind kind = kind_of(args.kind);
    const SignedGraph g = load_target(args.files);
    const Polynomial p = char_poly_exact(matrix_of(g, kind));
    if (as_json) {
        json coeffs = json::array();
        for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
        print_json({{"kind", std::string(to_string(kind))},
                    {"order", g.order()},
                    {"charpoly", to_string(p)},
                    {"coefficients", coeffs}});
    } else {
        std::cout << to_string(p) << '\n';
    }
    return exit_ok;
}

struct VerifyArgs {
    std::string theorem;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::size_t max_n = 5;
    double tol = default_cluster_tol;
    unsigned threads = 0;
};

int run_verify(const VerifyArgs& args, bool as_json) {
    VerifyOptions o;
    o.trials = args.trials;
    o.seed = args.seed;
    o.max_n = args.max_n;
    o.tol = args.tol;
    o.threads = args.threads;
    const VerifyReport r = verify_theorem(args.theorem, o);
    if (as_json)
        print_json(to_json(r));
    else
        std::cout << format_report(r);
    return r.ok() ? exit_ok : exit_failed;
}

struct DistinctArgs {
    std::vector<std::string> files;
    std::string kind = "adj";
    double tol = default_cluster_tol;
};

int run_distinct(const DistinctArgs& args, bool as_json) {
    const MatrixKind kind = kind_of(args.kind);
    DistinctReport r;
    if (args.files.size() == 2)
        r = distinct_count_corona(load(args.files[0]), load(args.files[1]), kind, args.tol);
    else
        r = distinct_count(load(args.files[0]), kind, args.tol);
    if (as_json) {
        print_json(to_json(r));
    } else {
        std::cout << "construction: " << r.construction << '\n'
                  << "kind: " << to_string(kind) << '\n'
                  << "distinct eigenvalues: " << r.distinct_count << '\n';
        std::cout << "values:";
        for (double v : r.values) std::cout << ' ' << fmt_double(v);
        std::cout << '\n';
        if (r.bound) {
            std::cout << "t1 = " << *r.t1 << ", t2 = " << *r.t2 << ", bound 2 t1 + t2 = " << *r.bound << " ("
                      << (r.within_bound() ? "within" : "EXCEEDED") << ")\n";
        }
    }
    return r.within_bound() ? exit_ok : exit_failed;
}

struct CospectralArgs {
    std::vector<std::string> pair;
    std::string companion;
    std::string kind = "adj";
};

int run_cospectral(const CospectralArgs& args, bool as_json) {
    CospectralSeed seed = default_cospectral_seed();
    if (!args.pair.empty()) {
        seed.s1 = load(args.pair[0]);
        seed.s2 = load(args.pair[1]);
    }
    if (!args.companion.empty()) seed.companion = load(args.companion);
    const CospectralCertificate c = cospectral_demo(seed.s1, seed.s2, seed.companion, kind_of(args.kind));
    if (as_json) {
        print_json(to_json(c));
    } else {
        std::cout << "kind: " << to_string(c.kind) << '\n'
                  << "corona 1: " << c.corona1.order() << " vertices, " << c.corona1.size() << " edges\n"
                  << "corona 2: " << c.corona2.order() << " vertices, " << c.corona2.size() << " edges\n"
                  << "charpoly 1: " << to_string(c.poly1) << '\n'
                  << "charpoly 2: " << to_string(c.poly2) << '\n'
                  << "characteristic polynomials equal: " << yes_no(c.polynomials_equal()) << '\n'
                  << "isomorphic: " << yes_no(c.isomorphic) << '\n';
        if (c.switching_isomorphic) std::cout << "switching isomorphic: " << yes_no(*c.switching_isomorphic) << '\n';
        std::cout << "certified cospectral, non-isomorphic: " << yes_no(c.certified()) << '\n';
    }
    return c.certified() ? exit_ok : exit_failed;
}

int run_paper_example(bool as_json) {
    const PaperExampleReport r = paper_example();
    if (as_json) {
        print_json(to_json(r));
    } else {
        std::cout << "corona: C4^- *s (K2,+), " << r.corona.order() << " vertices, " << r.corona.size()
                  << " edges\n"
                  << "charpoly: " << to_string(r.charpoly) << '\n'
                  << "numeric spectrum: " << format_spectrum(cluster(r.numeric)) << '\n'
                  << "closed form:      " << format_spectrum(cluster(r.closed_form)) << '\n'
                  << "closed form vs numeric, max gap: " << fmt_double(r.closed_vs_numeric) << '\n'
                  << "charpoly residual at numeric eigenvalues: " << fmt_double(r.max_charpoly_residual) << '\n'
                  << "distinct eigenvalues: " << r.distinct << '\n'
                  << "consistent: " << yes_no(r.consistent()) << '\n'
                  << "printed value          printed  observed  reproduced\n";
        for (const auto& p : r.printed) {
            std::string label = p.label;
            label.resize(std::max<std::size_t>(label.size(), 22), ' ');
            std::cout << label << ' ' << p.printed_multiplicity << "        " << p.observed_multiplicity
                      << "         " << yes_no(p.reproduced()) << '\n';
        }
    }
    return r.consistent() ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed neighbourhood corona spectra"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON instead of text");

    CoronaArgs corona;
    auto* c_corona = app.add_subcommand("corona", "Write S1 *s S2 in edge-list format");
    c_corona->add_option("A", corona.a, "First factor")->required()->check(CLI::ExistingFile);
    c_corona->add_option("B", corona.b, "Second factor")->required()->check(CLI::ExistingFile);
    c_corona->add_option("-o,--output", corona.out, "Output file (stdout when omitted)");

    SpectrumArgs spectrum;
    auto* c_spectrum = app.add_subcommand("spectrum", "Numeric spectrum of a graph, or of the corona of two factors");
    c_spectrum->add_option("G", spectrum.files, "Graph file, or two factor files")
        ->required()
        ->expected(1, 2)
        ->check(CLI::ExistingFile);
    c_spectrum->add_option("--kind", spectrum.kind, "adj, lap or netlap")->check(CLI::IsMember(kind_names));
    c_spectrum->add_flag("--closed-form", spectrum.closed_form, "Also evaluate the applicable closed form");
    c_spectrum->add_option("--tol", spectrum.tol, "Clustering tolerance")->check(CLI::PositiveNumber);

    CharpolyArgs charpoly;
    auto* c_charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial");
    c_charpoly->add_option("G", charpoly.files, "Graph file, or two factor files")
        ->required()
        ->expected(1, 2)
        ->check(CLI::ExistingFile);
    c_charpoly->add_option("--kind", charpoly.kind, "adj, lap or netlap")->check(CLI::IsMember(kind_names));

    VerifyArgs verify;
    auto* c_verify = app.add_subcommand("verify", "Randomized check of one theorem");
    c_verify->add_option("--theorem", verify.theorem, "Theorem id")
        ->required()
        ->check(CLI::IsMember(verifiable_theorems()));
    c_verify->add_option("--trials", verify.trials, "Number of trials");
    c_verify->add_option("--seed", verify.seed, "Run seed");
    c_verify->add_option("--max-n", verify.max_n, "Largest factor order")->check(CLI::Range(1, 8));
    c_verify->add_option("--tol", verify.tol, "Agreement tolerance")->check(CLI::PositiveNumber);
    c_verify->add_option("--threads", verify.threads, "Worker threads (0: all cores)");

    DistinctArgs distinct;
    auto* c_distinct = app.add_subcommand("distinct", "Distinct eigenvalue count");
    c_distinct->add_option("G", distinct.files, "Graph file, or two factor files")
        ->required()
        ->expected(1, 2)
        ->check(CLI::ExistingFile);
    c_distinct->add_option("--kind", distinct.kind, "adj, lap or netlap")->check(CLI::IsMember(kind_names));
    c_distinct->add_option("--tol", distinct.tol, "Clustering tolerance")->check(CLI::PositiveNumber);

    CospectralArgs cospectral;
    auto* c_cospectral = app.add_subcommand("cospectral-demo", "Certify a cospectral, non-isomorphic corona pair");
    c_cospectral->add_option("--pair", cospectral.pair, "Two cospectral factor files")
        ->expected(2)
        ->check(CLI::ExistingFile);
    c_cospectral->add_option("--companion", cospectral.companion, "Second corona factor")
        ->check(CLI::ExistingFile);
    c_cospectral->add_option("--kind", cospectral.kind, "adj, lap or netlap")->check(CLI::IsMember(kind_names));

    auto* c_paper = app.add_subcommand("paper-example", "C4^- *s (K2,+) consistency report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*c_corona) return run_corona(corona, as_json);
        if (*c_spectrum) return run_spectrum(spectrum, as_json);
        if (*c_charpoly) return run_charpoly(charpoly, as_json);
        if (*c_verify) return run_verify(verify, as_json);
        if (*c_distinct) return run_distinct(distinct, as_json);
        if (*c_cospectral) return run_cospectral(cospectral, as_json);
        if (*c_paper) return run_paper_example(as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
