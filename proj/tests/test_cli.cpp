// Runs the sncorona binary and checks output and exit status.
#include <sncorona/graph_io.hpp>

#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

/// Runs the CLI; captures stdout, or stderr when `want_stderr` is set.
Run run(const std::string& args, bool want_stderr = false) {
    const std::string cmd =
        std::string(SNCORONA_CLI) + " " + args + (want_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null");
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

Run run_stderr(const std::string& args) { return run(args, true); }

std::string sample(const char* name) { return std::string(SNCORONA_SAMPLES) + "/" + name; }

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / (std::string("sncorona_cli_") + name)).string();
}

}  // namespace

TEST(Cli, SpectrumOfUnbalancedFourCycle) {
    const auto r = run("spectrum " + sample("c4minus.sg") + " --kind adj");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "-1.41421 x2, 1.41421 x2\n");
}

TEST(Cli, SpectrumWithClosedForm) {
    const auto r = run("spectrum " + sample("c4minus.sg") + " " + sample("k2plus.sg") + " --kind adj --closed-form");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("closed form (theorem 2.3)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("agreement: PASS"), std::string::npos) << r.out;
}

TEST(Cli, ClosedFormNotApplicableIsReported) {
    const auto r = run("spectrum " + sample("c4minus.sg") + " --closed-form");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("not applicable"), std::string::npos);
}

TEST(Cli, SpectrumJson) {
    const auto r = run("--json spectrum " + sample("k3plus.sg") + " " + sample("k12minus.sg") + " --closed-form");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("kind"), "adj");
    EXPECT_EQ(j.at("closed_form").at("theorem"), "2.4");
    EXPECT_EQ(j.at("agreement"), true);
    // The flag may also follow the subcommand.
    EXPECT_EQ(run("spectrum " + sample("c4minus.sg") + " --json").out,
              run("--json spectrum " + sample("c4minus.sg")).out);
}

TEST(Cli, Charpoly) {
    const auto r = run("charpoly " + sample("c4minus.sg") + " --kind adj");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "4 + 0*t + -4*t^2 + 0*t^3 + 1*t^4\n");
    EXPECT_EQ(run("charpoly " + sample("c4minus.sg") + " --kind lap").out, "4 + -16*t + 20*t^2 + -8*t^3 + 1*t^4\n");
}

TEST(Cli, VerifyPassesAndIsDeterministic) {
    const auto a = run("verify --theorem 2.3 --trials 100 --seed 7");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, "PASS 100/100\n");
    const auto j1 = run("--json verify --theorem 5.1 --trials 20 --seed 3");
    const auto j2 = run("--json verify --theorem 5.1 --trials 20 --seed 3 --threads 1");
    EXPECT_EQ(j1.out, j2.out);
    EXPECT_EQ(nlohmann::json::parse(j1.out).at("passed"), 20);
}

TEST(Cli, CoronaWritesEdgeList) {
    const auto out = temp_path("corona.sg");
    const auto r = run("corona " + sample("c4minus.sg") + " " + sample("k2plus.sg") + " -o " + out);
    EXPECT_EQ(r.status, 0);
    const auto g = sncorona::read_graph(out);
    EXPECT_EQ(g.order(), 12U);
    EXPECT_EQ(g.size(), 24U);
    std::filesystem::remove(out);
}

TEST(Cli, MalformedGraphIsAUsageError) {
    const auto bad = temp_path("bad.sg");
    {
        std::ofstream f(bad);
        f << "# broken\n3\n0 1 +\n1 1 -\n";
    }
    const auto r = run("corona " + bad + " " + sample("k1.sg") + " -o " + temp_path("unused.sg"));
    EXPECT_EQ(r.status, 2);
    const auto err = run_stderr("corona " + bad + " " + sample("k1.sg"));
    EXPECT_NE(err.out.find("line 4"), std::string::npos) << err.out;
    EXPECT_NE(err.out.find("SelfLoop"), std::string::npos) << err.out;
    std::filesystem::remove(bad);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("nonsense").status, 2);
    EXPECT_EQ(run("verify --theorem 9.9").status, 2);
    EXPECT_EQ(run("spectrum " + sample("c4minus.sg") + " --kind signless").status, 2);
    EXPECT_EQ(run("spectrum /nonexistent.sg").status, 2);
    EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, Distinct) {
    const auto r = run("distinct " + sample("c4minus.sg") + " " + sample("k2plus.sg") + " --kind adj --tol 1e-6");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("distinct eigenvalues: 5"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("bound 2 t1 + t2 = 6"), std::string::npos) << r.out;
}

TEST(Cli, CospectralDemo) {
    const auto r = run("cospectral-demo --kind adj");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("certified cospectral, non-isomorphic: yes"), std::string::npos) << r.out;
    const auto p = run("--json cospectral-demo --pair " + sample("k14.sg") + " " + sample("c4k1.sg") +
                       " --companion " + sample("k1.sg"));
    EXPECT_EQ(p.status, 0);
    EXPECT_EQ(nlohmann::json::parse(p.out).at("certified"), true);
    EXPECT_EQ(run("cospectral-demo --kind netlap").status, 2);
}

TEST(Cli, WorkedExampleReport) {
    const auto r = run("paper-example");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("consistent: yes"), std::string::npos);
    const auto j = nlohmann::json::parse(run("--json paper-example").out);
    EXPECT_EQ(j.at("order"), 12);
    EXPECT_EQ(j.at("printed").at(0).at("reproduced"), true);
    EXPECT_EQ(j.at("printed").at(1).at("reproduced"), false);
}
