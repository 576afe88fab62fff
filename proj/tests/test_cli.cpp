#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "s3modes/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = s3modes::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, LensMultiplicityTable) {
    const Result r = run({"multiplicity", "--space", "lens:5,1", "--k-max", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], 1);
    ASSERT_EQ(j["table"].size(), 11u);
    EXPECT_EQ(j["table"][2]["k"], 2);
    EXPECT_EQ(j["table"][2]["multiplicity"], 3);
}

TEST(Cli, PrismMultiplicity) {
    const Result r = run({"multiplicity", "--space", "prism:2", "--k", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["multiplicity"], 10);
    const Result csv = run({"multiplicity", "--space", "prism:2", "--k", "4", "--format", "csv"});
    EXPECT_EQ(csv.out, "k,multiplicity,projector_rank,closed_form,published\n4,10,10,10,10\n");
}

TEST(Cli, VerifySuite) {
    const Result r = run({"verify", "--k", "2", "--suite", "bases"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["tolerances"]["orthogonality"], 1e-10);
    // An impossible tolerance is a numerical failure.
    const Result strict = run({"verify", "--k", "2", "--suite", "bases", "--tol-harmonic", "1e-30"});
    EXPECT_EQ(strict.code, 1);
    EXPECT_NE(strict.err.find("harmonicity"), std::string::npos);
}

TEST(Cli, ValidationErrors) {
    EXPECT_EQ(run({"verify", "--k", "2", "--bogus"}).code, 2);
    EXPECT_EQ(run({"multiplicity", "--space", "lens:4,2", "--k", "2"}).code, 2);
    EXPECT_EQ(run({"multiplicity", "--space", "lens:5,1"}).code, 2);
    EXPECT_EQ(run({"basis-matrix", "--k", "3"}).code, 2);
    EXPECT_EQ(run({"eval", "--k", "3", "--basis", "B3", "--point", "0.1,0.2,0.3"}).code, 2);
    EXPECT_EQ(run({"rotate", "--k", "2", "--rotation", "1,1,0,0,1,0,0,0"}).code, 2);
    EXPECT_EQ(run({"rotate", "--k", "2"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, DeterministicOutput) {
    const std::vector<std::string> args{"rotate", "--k", "2", "--rotation", "0.5,0.5,0.5,0.5,0,0.6,0,0.8"};
    const Result a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EvalAndOutFile) {
    const std::string path = "cli_eval_test.json";
    const Result r = run({"eval", "--k", "2", "--mode", "2,2", "--point", "0,0,0", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    const auto j = nlohmann::json::parse(f);
    std::remove(path.c_str());
    // T_{2;1,1} at chi = 0 is its normalization constant sqrt(3)/pi.
    EXPECT_NEAR(j["values"][0]["value"][0].get<double>(), 0.5513288954217921, 1e-15);
}

TEST(Cli, RotateFromSpaceAndInvariants) {
    const Result r = run({"rotate", "--k", "2", "--space", "lens:5,1", "--frame", "B2", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("row,col,re,im\n", 0), 0u);
    const Result inv = run({"invariants", "--space", "lens:5,1", "--k", "2"});
    ASSERT_EQ(inv.code, 0) << inv.err;
    EXPECT_EQ(nlohmann::json::parse(inv.out)["dimension"], 3);
}
