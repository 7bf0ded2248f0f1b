#include "pertcoul_cli/cli.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using pertcoul::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const char* name) { return slurp(std::string(PERTCOUL_GOLDEN_DIR) + "/" + name); }

// int_0^inf r^2 exp(-2r - r^2) dr by composite Simpson on [0, 20].
double p1_norm_integral() {
    const int panels = 400000;
    const double hi = 20.0, h = hi / panels;
    const auto f = [](double r) { return r * r * std::exp(-2.0 * r - r * r); };
    double sum = f(0.0) + f(hi);
    for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return sum * h / 3.0;
}

const Json* find_check(const Json& doc, const std::string& name) {
    for (const auto& c : doc["checks"]) {
        if (c["name"] == name) return &c;
    }
    return nullptr;
}

} // namespace

TEST(Solve, P1DerivesB) {
    const auto r = call({"solve", "--a", "1", "--c", "0.5", "--N", "3", "--l", "0", "--derive", "b"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = Json::parse(r.out);
    EXPECT_DOUBLE_EQ(doc["inputs"]["params"]["b"].get<double>(), 1.0);
    EXPECT_DOUBLE_EQ(doc["views"]["coulomb"]["E"].get<double>(), 1.0);
    EXPECT_DOUBLE_EQ(doc["views"]["oscillator"]["E"].get<double>(), 1.0);
    EXPECT_EQ(doc["psi"]["q"].get<double>(), 1.0);
    EXPECT_EQ(doc["psi"]["lambda"].get<double>(), 1.0);
    EXPECT_EQ(doc["psi"]["kappa"].get<double>(), 0.5);
    EXPECT_NEAR(doc["psi"]["N0"].get<double>(), 1.0 / std::sqrt(p1_norm_integral()), 1e-6);
    ASSERT_EQ(doc["spectrum"].size(), 3u);
    for (int n = 0; n < 3; ++n) EXPECT_DOUBLE_EQ(doc["spectrum"][n]["E_n"].get<double>(), 1.0 + n);
}

TEST(Solve, ConstraintViolationExitsTwo) {
    const auto r = call({"solve", "--a", "1", "--b", "2", "--c", "0.5", "--N", "3", "--l", "0"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("violation 1"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
}

TEST(Solve, HydrogenLimit) {
    const auto r = call({"solve", "--a", "1", "--N", "3", "--l", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = Json::parse(r.out);
    EXPECT_EQ(doc["views"]["coulomb"]["E"].get<double>(), -0.5);
    EXPECT_TRUE(doc["views"]["oscillator"].is_null());
}

TEST(Solve, UsageErrors) {
    EXPECT_EQ(call({}).code, 1);
    EXPECT_EQ(call({"solve", "--a", "one"}).code, 1);
    EXPECT_EQ(call({"solve", "--a", "1,2"}).code, 1);
    EXPECT_EQ(call({"solve", "--a", "1", "--out", "xml"}).code, 1);
    EXPECT_EQ(call({"solve", "--a", "1", "--b", "1", "--c", "0.5", "--derive", "b"}).code, 1);
    EXPECT_EQ(call({"solve", "--a", "1", "--N", "1", "--l", "0"}).code, 1);  // M = 1
    EXPECT_EQ(call({"frobnicate"}).code, 1);
    EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Solve, ConfigFileWithOverride) {
    const std::string path = ::testing::TempDir() + "pertcoul_p1.cfg";
    {
        std::ofstream cfg(path);
        cfg << "# case P1\na = 1\nc = 0.5\nderive = b\n";
    }
    const auto from_file = call({"solve", "--config", path});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_EQ(from_file.out, call({"solve", "--a", "1", "--c", "0.5", "--derive", "b"}).out);

    const auto overridden = call({"solve", "--config", path, "--c", "2"});
    ASSERT_EQ(overridden.code, 0) << overridden.err;
    EXPECT_DOUBLE_EQ(Json::parse(overridden.out)["inputs"]["params"]["b"].get<double>(), 2.0);

    std::ofstream(path) << "bogus = 1\n";
    EXPECT_EQ(call({"solve", "--config", path}).code, 1);
}

TEST(Verify, P1AssertsPassAndInfoIsReported) {
    const auto r = call({"verify", "--a", "1", "--c", "0.5", "--derive", "b"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = Json::parse(r.out);
    int asserts = 0;
    for (const auto& c : doc["checks"]) {
        if (c["kind"] == "assert") {
            ++asserts;
            EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
        }
    }
    EXPECT_GE(asserts, 8);
    const auto* roots = find_check(doc, "oracle_n1_roots");
    ASSERT_NE(roots, nullptr);
    EXPECT_NEAR((*roots)["value"][0].get<double>(), (3.0 - std::sqrt(5.0)) / 2.0, 1e-10);
    EXPECT_NEAR((*roots)["value"][1].get<double>(), (3.0 + std::sqrt(5.0)) / 2.0, 1e-10);
    const auto* ladder = find_check(doc, "ladder_state_residual");
    ASSERT_NE(ladder, nullptr);
    EXPECT_GT((*ladder)["value"].get<double>(), 0.0);
}

TEST(Verify, M5Case) {
    const auto r = call({"verify", "--a", "1", "--b", "0.5", "--c", "0.5", "--N", "5", "--l", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_DOUBLE_EQ(Json::parse(r.out)["views"]["coulomb"]["E"].get<double>(), 2.375);
}

TEST(Verify, HydrogenReducesToCoulombChecks) {
    const auto r = call({"verify", "--a", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = Json::parse(r.out);
    EXPECT_EQ(find_check(doc, "riccati_oscillator"), nullptr);
    EXPECT_NE(find_check(doc, "riccati_coulomb"), nullptr);
}

TEST(Verify, FailedAssertExitsThree) {
    // A grid far too coarse for the closed form to pass its residual checks.
    const auto r = call({"verify", "--a", "1", "--c", "0.5", "--derive", "b", "--h", "0.05"});
    EXPECT_EQ(r.code, 3);
    const auto doc = Json::parse(r.out);
    EXPECT_FALSE((*find_check(doc, "ground_h_residual"))["pass"].get<bool>());
}

TEST(Oracle, Levels) {
    const auto one = Json::parse(call({"oracle", "--b", "1", "--c", "0.5", "--n", "1"}).out);
    ASSERT_EQ(one["solutions"].size(), 2u);
    EXPECT_NEAR(one["solutions"][0]["A"].get<double>(), 0.3819660112501051, 1e-10);
    EXPECT_NEAR(one["solutions"][1]["A"].get<double>(), 2.618033988749895, 1e-10);

    const auto zero = Json::parse(call({"oracle", "--b", "1", "--c", "0.5", "--n", "0"}).out);
    ASSERT_EQ(zero["solutions"].size(), 1u);
    EXPECT_NEAR(zero["solutions"][0]["A"].get<double>(), 1.0, 1e-13);

    const auto r3 = call({"oracle", "--b", "1", "--c", "0.5", "--n", "3", "--check"});
    ASSERT_EQ(r3.code, 0) << r3.err;
    const auto three = Json::parse(r3.out);
    ASSERT_EQ(three["solutions"].size(), 4u);
    for (const auto& s : three["solutions"]) EXPECT_LE(s["h_residual"].get<double>(), 1e-6);

    EXPECT_EQ(call({"oracle", "--b", "1", "--c", "0.5"}).code, 1);
}

TEST(Eig, Levels) {
    const auto p1 = Json::parse(call({"eig", "--a", "1", "--b", "1", "--c", "0.5", "--k", "3"}).out);
    ASSERT_EQ(p1["eigenvalues"].size(), 3u);
    EXPECT_NEAR(p1["eigenvalues"][0].get<double>(), 1.0, 1e-4);

    // fixed Lambda = 0: radial excitations step by 2 hbar omega
    const auto osc = Json::parse(call({"eig", "--c", "0.5", "--k", "3"}).out);
    EXPECT_NEAR(osc["eigenvalues"][0].get<double>(), 1.5, 5e-5);
    EXPECT_NEAR(osc["eigenvalues"][1].get<double>(), 3.5, 5e-5);
    EXPECT_NEAR(osc["eigenvalues"][2].get<double>(), 5.5, 5e-5);

    const auto h = Json::parse(
        call({"eig", "--a", "1", "--rmax", "40", "--h", "0.002", "--richardson", "--k", "1"}).out);
    EXPECT_EQ(h["inputs"]["grid"]["h"].get<double>(), 0.002);
    EXPECT_EQ(h["inputs"]["grid"]["count"].get<int>(), 20000);
    EXPECT_TRUE(h["inputs"]["richardson"].get<bool>());
    EXPECT_NEAR(h["eigenvalues"][0].get<double>(), -0.5, 5e-5);
}

TEST(Sweep, DerivedB) {
    const auto r = call({"sweep", "--a", "0.5,1,2", "--c", "0.5", "--N", "3", "--derive", "b"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "a,b,c,N,l,n,E_closed,E_numeric,abs_err,constraint_residual");
    const double as[] = {0.5, 1.0, 2.0};
    int rows = 0;
    while (std::getline(in, line)) {
        std::vector<double> cells;
        std::stringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(std::stod(cell));
        ASSERT_EQ(cells.size(), 10u);
        EXPECT_EQ(cells[0], as[rows]);
        EXPECT_NEAR(cells[1], cells[0], 1e-15);  // b = a at c = 0.5, M = 3
        EXPECT_LE(cells[8], 1e-4);
        ++rows;
    }
    EXPECT_EQ(rows, 3);
}

TEST(Sweep, OverDimension) {
    const auto r = call({"sweep", "--a", "1", "--c", "0.5", "--N", "3,5", "--derive", "b"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\n1,1,0.5,3,0,0,1,"), std::string::npos);
    EXPECT_NE(r.out.find("\n1,0.5,0.5,5,0,0,2.375,"), std::string::npos);
}

TEST(Sweep, EmptyRangeIsHeaderOnly) {
    const auto r = call({"sweep", "--a", "0.5:2:0", "--c", "0.5", "--derive", "b"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "a,b,c,N,l,n,E_closed,E_numeric,abs_err,constraint_residual\n");
    EXPECT_EQ(call({"sweep", "--a", "1:2"}).code, 1);
    EXPECT_EQ(call({"sweep", "--a", "1:2:-1"}).code, 1);
}

TEST(Golden, MatchesCheckedInReports) {
    EXPECT_EQ(call({"solve", "--a", "1", "--c", "0.5", "--N", "3", "--l", "0", "--derive", "b"}).out,
              golden("solve_p1.json"));
    EXPECT_EQ(call({"solve", "--a", "1", "--N", "3", "--l", "0"}).out, golden("solve_hydrogen.json"));
    EXPECT_EQ(call({"verify", "--a", "1", "--c", "0.5", "--N", "3", "--l", "0", "--derive", "b"}).out,
              golden("verify_p1.json"));
    EXPECT_EQ(call({"verify", "--a", "1", "--N", "3", "--l", "0"}).out, golden("verify_hydrogen.json"));
}

TEST(Golden, ProcessOutputMatchesInProcess) {
    const std::string cmd = std::string(PERTCOUL_TOOL_PATH) + " solve --a 1 --N 3 --l 0";
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
    EXPECT_EQ(pclose(pipe), 0);
    EXPECT_EQ(out, golden("solve_hydrogen.json"));
}
