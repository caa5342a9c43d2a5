#include "hstar/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace hstar;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "hstar");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(HSTAR_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, HStarOfPaperExample) {
    const auto r = run({"hstar", data("two_delta2.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = io::Json::parse(r.out);
    EXPECT_EQ(j["coeffs"], io::Json::parse("[1,3,0]"));
    EXPECT_EQ(j["agreement"], true);
    EXPECT_EQ(j["volume"], 4);
}

TEST(Cli, TextFormat) {
    const auto r = run({"--format", "text", "hstar", data("two_delta2.json")});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1 + 3t"), std::string::npos);
    EXPECT_NE(r.out.find("agreement: true"), std::string::npos);
}

TEST(Cli, ParamCheck) {
    const auto r = run({"param-check", "--p", "3", "--r", "2", "--k", "3", "--d", "7"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(io::Json::parse(r.out)["valid"], true);
    EXPECT_EQ(io::Json::parse(run({"param-check", "--p", "3", "--r", "2", "--k", "3", "--d", "8"}).out)["valid"],
              false);
}

TEST(Cli, BernoulliSweep) {
    const auto r = run({"bernoulli-sweep", "--p", "3", "--r", "2"});
    ASSERT_EQ(r.code, 0);
    const auto j = io::Json::parse(r.out);
    std::size_t odd_zero = 0;
    for (const auto& c : j["characters"]) odd_zero += c["odd"].get<bool>() && c["is_zero"].get<bool>();
    EXPECT_EQ(odd_zero, 0u);
    EXPECT_EQ(run({"bernoulli-sweep", "--p", "2", "--r", "3"}).code, 1);
}

TEST(Cli, LambdaAndBack) {
    const auto lam = run({"lambda", data("two_delta2.json")});
    ASSERT_EQ(lam.code, 0);
    EXPECT_EQ(io::Json::parse(lam.out)["order"], 4);
    const auto s = run({"simplex-from-group", data("cyclic_group_5.json")});
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(hstar::hstar(io::simplex_from_json(io::Json::parse(s.out))),
              HStarPolynomial(std::vector<BigInt>{1, 0, 4, 0}));
}

TEST(Cli, CodeCommands) {
    const auto sc = run({"simplex-code", "--p", "3", "--r", "2"});
    ASSERT_EQ(sc.code, 0);
    EXPECT_EQ(io::Json::parse(sc.out)["n"], 4);

    const auto s = run({"simplex-from-code", "--p", "3", data("pair_code_f3.txt")});
    ASSERT_EQ(s.code, 0) << s.err;
    const auto simplex = io::simplex_from_json(io::Json::parse(s.out));
    EXPECT_EQ(simplex.dim(), 7u);

    const auto dec = run({"decompose", data("pair_code_f3.json")});
    ASSERT_EQ(dec.code, 0) << dec.err;
    const auto dj = io::Json::parse(dec.out);
    EXPECT_EQ(dj["s"], 1);
    EXPECT_EQ(dj["pairs"].size(), 1u);
}

TEST(Cli, CodeFromSimplexRoundTrip) {
    const auto s = run({"simplex-from-code", data("pair_code_f3.json")});
    ASSERT_EQ(s.code, 0);
    const std::string path = testing::TempDir() + "/hstar_bridge_simplex.json";
    std::ofstream(path) << s.out;
    const auto c = run({"code-from-simplex", path});
    ASSERT_EQ(c.code, 0) << c.err;
    const auto j = io::Json::parse(c.out);
    EXPECT_EQ(j["p"], 3);
    EXPECT_EQ(j["k"], 3);
    EXPECT_EQ(j["r"], 2);
}

TEST(Cli, DomainErrorsGiveJsonObject) {
    const auto r = run({"code-from-simplex", data("two_delta2.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(io::Json::parse(r.err)["error"], "DegreeOutOfRange");
    const auto missing = run({"hstar", "/nonexistent/file.json"});
    EXPECT_EQ(missing.code, 1);
    EXPECT_EQ(io::Json::parse(missing.err)["error"], "FileNotFound");
}

TEST(Cli, ResourceLimitExitCode) {
    const auto r = run({"--caps", R"({"max_volume": 2})", "hstar", data("two_delta2.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(io::Json::parse(r.err)["error"], "ResourceLimit");
}

TEST(Cli, CapsFromEnvironment) {
    ::setenv("HSTAR_CAPS", R"({"max_field_order": 5})", 1);
    const auto r = run({"bernoulli-sweep", "--p", "3", "--r", "2"});
    ::unsetenv("HSTAR_CAPS");
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 64);
    EXPECT_EQ(run({"frobnicate"}).code, 64);
    EXPECT_EQ(run({"param-check", "--p", "3"}).code, 64);
    EXPECT_EQ(run({"--caps", "{\"bogus\": 1}", "param-check", "--p", "3", "--r", "2", "--k", "3", "--d", "7"}).code,
              64);
    EXPECT_EQ(run({"--format", "xml", "hstar", data("two_delta2.json")}).code, 64);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DeterministicOutput) {
    const auto a = run({"bernoulli-sweep", "--p", "5", "--r", "2"});
    const auto b = run({"bernoulli-sweep", "--p", "5", "--r", "2"});
    EXPECT_EQ(a.out, b.out);
}
