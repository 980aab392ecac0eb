#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "gsqg/config/config.hpp"
#include "gsqg/error.hpp"
#include "gsqg/harness/commands.hpp"
#include "gsqg/spectral/fft.hpp"
#include "gsqg/spectral/norms.hpp"
#include "gsqg/spectral/snapshot.hpp"

using namespace gsqg;
using namespace gsqg::config;
using namespace gsqg::harness;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir(const std::string& name) {
    fs::path p = fs::path(GSQG_TEST_TMP) / "config" / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

void expect_parse_error(const std::string& text, int line, int column) {
    try {
        (void)parse_config(text);
        ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), line) << text;
        EXPECT_EQ(e.column(), column) << text;
        EXPECT_EQ(e.code(), Errc::ParseError);
    }
}

std::string value_of(const ExperimentReport& r, const std::string& key) {
    for (const auto& [k, v] : r.values) {
        if (k == key) return v;
    }
    return {};
}

const char* kFull =
    "# comment\n"
    "[grid]\n"
    "n = 32\n"
    "box = 6.283185307179586\n"
    "[suite]\n"
    "beta = 1.5\n"
    "gamma = 0.85\n"
    "m = one_plus(logpow(1.5))\n"
    "p_a = quot(logpow(0),logpow(1))\n"
    "omega_a = iterlogpow(0.5)\n"
    "nu = logpow(1.5)\n"
    "[run]\n"
    "dt = 0.001\n"
    "t_final = 0.25\n"
    "scheme = ifeuler\n"
    "eps_visc = 1e-3\n"
    "lambda_track = 0.05\n"
    "seed = 18446744073709551615\n"
    "cadence = 4\n"
    "[init]\n"
    "kind = named\n"
    "name = vortex\n"
    "amplitude = 2\n"
    "[output]\n"
    "dir = results/run1\n";

}  // namespace

TEST(Config, Defaults) {
    const Config c = parse_config("");
    EXPECT_EQ(c.grid.n, 128);
    EXPECT_EQ(c.seed, 0u);
    EXPECT_FALSE(c.dt.has_value());
    EXPECT_EQ(c.init.kind, InitKind::Random);
    EXPECT_EQ(c.serialize(), Config{}.serialize());
}

TEST(Config, ParsesEverySection) {
    const Config c = parse_config(kFull);
    EXPECT_EQ(c.grid.n, 32);
    EXPECT_EQ(c.suite.beta, 1.5);
    EXPECT_EQ(c.suite.gamma, 0.85);
    EXPECT_EQ(c.suite.m.to_string(), "one_plus(logpow(1.5))");
    EXPECT_EQ(*c.dt, 0.001);
    EXPECT_EQ(c.scheme, solver::Scheme::IFEuler);
    EXPECT_EQ(c.seed, 18446744073709551615ull);
    EXPECT_EQ(c.cadence, 4);
    EXPECT_EQ(c.init.kind, InitKind::Named);
    EXPECT_EQ(c.init.name, "vortex");
    EXPECT_EQ(c.out_dir, fs::path("results/run1"));
}

TEST(ConfigProperty, RoundTripIsIdempotent) {
    for (const std::string text : {std::string(), std::string(kFull), std::string("[run]\ndt = auto\n[init]\nkind = file\npath = a b.gsqg\n")}) {
        const Config a = parse_config(text);
        const std::string s1 = a.serialize();
        const Config b = parse_config(s1);
        EXPECT_EQ(b.serialize(), s1);
        EXPECT_EQ(b.digest(), a.digest());
    }
}

TEST(Config, DigestIsFnv1a) {
    // Published FNV-1a 64-bit test vectors.
    EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
    EXPECT_NE(parse_config(kFull).digest(), Config{}.digest());
}

TEST(Config, ErrorPositions) {
    expect_parse_error("[grid]\nn = 5\n", 2, 5);
    expect_parse_error("[grid]\nfoo = 1\n", 2, 1);
    expect_parse_error("[suite]\nm = logpow(1\n", 2, 13);
    expect_parse_error("n = 4\n", 1, 1);
    expect_parse_error("[grid]\nn = 8\nn = 8\n", 3, 1);
    expect_parse_error("[nosuch]\n", 1, 2);
}

TEST(Config, RejectsInvalidValues) {
    for (const char* text : {"[grid]\nn = abc\n", "[run]\nt_final = -1\n", "[run]\nscheme = rk45\n",
                             "[run]\nseed = -3\n", "[init]\nkind = magic\n", "[suite]\nbeta = 3\n",
                             "[grid]\nn\n", "[run]\ncadence = 0\n"}) {
        EXPECT_THROW((void)parse_config(text), ParseError) << text;
    }
}

TEST(Config, LoadMissingFile) {
    try {
        (void)load_config("/nonexistent/dir/x.cfg");
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::IoError);
    }
}

TEST(Config, InitialFieldHasZeroMeanAndIsSeeded) {
    Config c = parse_config("[grid]\nn = 16\n");
    const auto a = initial_field(c);
    EXPECT_TRUE(a.zero_mean());
    EXPECT_NEAR(spectral::l2_norm(a), 1.0, 1e-14);
    c.seed = 5;
    const auto b = initial_field(c);
    EXPECT_NE(spectral::l2_norm(a - b), 0.0);
}

TEST(Config, InitialFieldFromSnapshot) {
    const fs::path dir = tmp_dir("init");
    Config c = parse_config("[grid]\nn = 16\n");
    const auto f = initial_field(c);
    spectral::write_snapshot(dir / "f.gsqg", spectral::transform_backward(f));
    c.init.kind = InitKind::File;
    c.init.path = dir / "f.gsqg";
    EXPECT_LT(spectral::l2_norm(initial_field(c) - f), 1e-14);
    c.init.path = dir / "absent.gsqg";
    EXPECT_THROW((void)initial_field(c), Error);
}

TEST(Commands, CheckAdmissibleSuite) {
    const ExperimentReport r = cmd_check(Config{});
    EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Commands, CheckThresholdSuiteFails) {
    Config c;
    c.suite.m = multipliers::Symbol::log_power(0.5);
    c.suite.nu = multipliers::Symbol::log_power(0.5);
    EXPECT_FALSE(cmd_check(c).passed());
}

TEST(Commands, ExperimentList) {
    EXPECT_TRUE(parse_experiment_list("").empty());
    EXPECT_EQ(parse_experiment_list("energy,maxprin"), (std::vector<std::string>{"energy", "maxprin"}));
    EXPECT_EQ(parse_experiment_list("all").size(), experiment_names().size());
    EXPECT_THROW((void)parse_experiment_list("energy,bogus"), Error);
}

TEST(Commands, VerifyEmptyList) {
    const VerifyOutcome v = cmd_verify(Config{}, {});
    EXPECT_TRUE(v.summary.passed());
    EXPECT_TRUE(v.reports.empty());
}

TEST(Commands, VerifyUnknownName) {
    try {
        (void)cmd_verify(Config{}, {"bogus"});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UsageError);
    }
}

TEST(Commands, VerifyParallelMatchesSerial) {
    Config c = parse_config("[grid]\nn = 16\n[run]\nt_final = 0.05\n");
    const std::vector<std::string> names{"logidentity", "energy"};
    const VerifyOutcome a = cmd_verify(c, names, {}, 1);
    const VerifyOutcome b = cmd_verify(c, names, {}, 2);
    ASSERT_EQ(a.reports.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(a.reports[i].to_text(), b.reports[i].to_text());
    EXPECT_EQ(a.reports[0].id, "logidentity");
}

TEST(Commands, ProbeUnknownKind) {
    try {
        (void)cmd_probe("nope", Config{});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UsageError);
    }
}

TEST(Commands, SimulateWritesArtifacts) {
    const fs::path dir = tmp_dir("simulate");
    Config c = parse_config("[grid]\nn = 16\n[run]\nt_final = 0.05\n");
    const SimulationOutput out = cmd_simulate(c, dir);
    EXPECT_TRUE(fs::exists(dir / "norms.csv"));
    EXPECT_TRUE(fs::exists(dir / "initial.gsqg"));
    EXPECT_TRUE(fs::exists(dir / "final.gsqg"));
    const auto fin = spectral::read_snapshot(dir / "final.gsqg");
    const auto expect = spectral::transform_backward(out.result.trajectory.final_state);
    EXPECT_EQ(fin.values, expect.values);
}

TEST(Commands, SimulateZeroTimeReproducesInput) {
    const fs::path dir = tmp_dir("simulate0");
    Config c = parse_config("[grid]\nn = 16\n[run]\nt_final = 0\n");
    (void)cmd_simulate(c, dir);
    EXPECT_EQ(spectral::read_snapshot(dir / "initial.gsqg").values, spectral::read_snapshot(dir / "final.gsqg").values);
}

TEST(Commands, NormsOfSnapshot) {
    const fs::path dir = tmp_dir("norms");
    Config c = parse_config("[grid]\nn = 16\n");
    const auto f = initial_field(c);
    spectral::write_snapshot(dir / "f.gsqg", spectral::transform_backward(f));
    const ExperimentReport r = cmd_norms(dir / "f.gsqg", c);
    EXPECT_NEAR(std::stod(value_of(r, "l2")), 1.0, 1e-12);
    EXPECT_FALSE(value_of(r, "y_norm").empty());
    EXPECT_THROW((void)cmd_norms(dir / "absent.gsqg", c), Error);
}
