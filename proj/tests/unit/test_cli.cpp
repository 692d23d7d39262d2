#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cremona/cli.hpp"
#include "cremona/ratmap.hpp"

using namespace cremona;
using nlohmann::json;

namespace {

struct Res {
    int code;
    std::string out, err;
};

Res call(std::vector<std::string> args) {
    std::ostringstream o, e;
    int c = cli::run(args, o, e);
    return {c, o.str(), e.str()};
}

json call_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json"});
    Res r = call(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

}  // namespace

TEST(Cli, ComposeSigma) {
    json j = call_json({"compose", "--f", "y*z:x*z:x*y", "--g", "y*z:x*z:x*y"});
    EXPECT_TRUE(j["is_identity"].get<bool>());
    EXPECT_EQ(j["degree"], 1);
    EXPECT_EQ(j["command"], "compose");
    EXPECT_EQ(j["tool_version"], CREMONA_VERSION);
    EXPECT_EQ(j["field_discriminant"], 0);
}

TEST(Cli, ClassifyRho) {
    json j = call_json({"classify-quadratic", "--f", "x*y:z^2:y*z"});
    EXPECT_EQ(j["stratum"], "Sigma2");
    EXPECT_EQ(j["ind_points"].size(), 2u);
    EXPECT_EQ(j["det_jac_lines"].size(), j["contraction_targets"].size());
}

TEST(Cli, WeylLehmer) {
    json j = call_json({"weyl", "--n", "10", "--standard", "--charpoly", "--classify"});
    EXPECT_EQ(j["salem_class"], "Salem");
    EXPECT_NEAR(j["dominant_root"].get<double>(), 1.17628081826, 1e-8);
    EXPECT_EQ(j["matrix"].size(), 11u);
    EXPECT_TRUE(j.contains("charpoly"));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(call({}).code, cli::kUsageError);
    EXPECT_EQ(call({"compose"}).code, cli::kUsageError);
    EXPECT_EQ(call({"compose", "--f", "x:y"}).code, cli::kUsageError);
    EXPECT_EQ(call({"weyl", "--n", "ten"}).code, cli::kUsageError);
    EXPECT_EQ(call({"--format", "xml", "noether", "--nu", "2"}).code, cli::kUsageError);
    Res r = call({"classify-quadratic", "--f", "x^2+y^2 : x*z : y*z"});
    EXPECT_EQ(r.code, cli::kDomainError);
    EXPECT_NE(r.err.find("FieldObstruction"), std::string::npos);
    r = call({"jung", "--aut", "y + (y + x^2)^2 + (y + x^2)^3, y + x^2"});
    EXPECT_EQ(r.code, cli::kDomainError);
    EXPECT_NE(r.err.find("NotAutomorphism"), std::string::npos);
    r = call({"invert", "--f", "x^2:y^2:z^2"});
    EXPECT_EQ(r.code, cli::kDomainError);
    EXPECT_NE(r.err.find("NotFound"), std::string::npos);
    EXPECT_EQ(call({"catalog", "verify", "nope"}).code, cli::kDomainError);
    EXPECT_EQ(call({"--help"}).code, cli::kOk);
}

TEST(Cli, FieldWidening) {
    json j = call_json({"--discriminant", "-1", "classify-quadratic", "--f", "x^2+y^2 : x*z : y*z"});
    EXPECT_EQ(j["stratum"], "Sigma3");
    EXPECT_EQ(j["field_discriminant"], -1);
    j = call_json({"compose", "--f", "sqrt(5)*x : y : z", "--g", "x : y : z"});
    EXPECT_EQ(j["field_discriminant"], 5);
}

TEST(Cli, MapsRoundTrip) {
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> cases = {
        {{"compose", "--f", "y^2*z : x*(x*z+y^2) : y*(x*z+y^2)", "--g", "x*y:z^2:y*z"}, {"f", "g", "result"}},
        {{"invert", "--f", "y^2*z : x*(x*z+y^2) : y*(x*z+y^2)"}, {"map", "inverse"}},
        {{"map-info", "--f", "x*(x+y) : z*(x+y) : x*(2*x+z)"}, {"map", "inverse"}},
        {{"classify-quadratic", "--f", "x*y : x*z : y*z"}, {"map"}},
        {{"growth", "--map", "x*z : z^2 : x^2 + z^2 - y*z", "--horizon", "4"}, {"map"}},
        {{"stability", "--f", "y*z : y^2 - x*z : z^2", "--horizon", "4"}, {"map", "inverse"}},
        {{"compose", "--f", "x + sqrt(-3)*y : y : z", "--power", "3"}, {"result"}},
    };
    for (auto& [args, keys] : cases) {
        json j = call_json(args);
        ASSERT_FALSE(j.is_null());
        for (auto& k : keys) {
            ASSERT_TRUE(j.contains(k)) << k;
            std::string s = j[k].get<std::string>();
            EXPECT_EQ(RatMap::parse(s).str(), s);
        }
    }
    // text mode prints the same strings
    Res r = call({"compose", "--f", "y*z:x*z:x*y", "--g", "x*y:z^2:y*z"});
    ASSERT_EQ(r.code, 0);
    auto pos = r.out.find("result: ");
    std::string line = r.out.substr(pos + 8, r.out.find('\n', pos) - pos - 8);
    EXPECT_EQ(RatMap::parse(line), compose(RatMap::parse("y*z:x*z:x*y"), RatMap::parse("x*y:z^2:y*z")));
}

TEST(Cli, GrowthCsv) {
    Res r = call({"--format", "csv", "growth", "--monomial", "2,1;1,1", "--horizon", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, 12), "k,deg,ratio\n");
    EXPECT_NE(r.out.find("5,144,"), std::string::npos);
}

TEST(Cli, Config) {
    std::string path = ::testing::TempDir() + "cremona_test.conf";
    {
        std::ofstream f(path);
        f << "# defaults\ndiscriminant = -3\nbudget_digits = 20000\nseed = 9\nhorizon = 5\n";
    }
    json j = call_json({"--config", path, "growth", "--map", "y*z:x*z:x*y"});
    EXPECT_EQ(j["horizon"], 5);
    EXPECT_EQ(j["field_discriminant"], -3);
    // flags win over the file
    j = call_json({"--config", path, "--horizon", "7", "growth", "--map", "y*z:x*z:x*y"});
    EXPECT_EQ(j["horizon"], 7);
    {
        std::ofstream f(path);
        f << "colour = blue\n";
    }
    EXPECT_EQ(call({"--config", path, "noether", "--nu", "2"}).code, cli::kUsageError);
    {
        std::ofstream f(path);
        f << "discriminant = 12\n";
    }
    EXPECT_EQ(call({"--config", path, "noether", "--nu", "2"}).code, cli::kUsageError);
    std::remove(path.c_str());
}

TEST(Cli, Orbit) {
    std::string path = ::testing::TempDir() + "cremona_cloud.csv";
    json j = call_json({"orbit", "--family", "fab", "--alpha", "exp(2*i*sqrt(3))", "--beta", "exp(2*i*sqrt(2))",
                        "--seed", "1e-4i,1e-4i", "--n", "500", "--proj", "omega1", "--out", path});
    EXPECT_EQ(j["rows_written"], 500);
    EXPECT_LT(j["max_abs_x"].get<double>(), 0.1);
    std::ifstream f(path);
    std::string head;
    std::getline(f, head);
    EXPECT_EQ(head, "n,u,v,w");
    std::remove(path.c_str());
    Res r = call({"orbit", "--alpha", "1", "--beta", "1", "--n", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
}

TEST(Cli, JungAndNoether) {
    json j = call_json({"jung", "--aut", "x + (y + x^2)^2 + (y + x^2)^3, y + x^2"});
    EXPECT_TRUE(j["verified"].get<bool>());
    EXPECT_EQ(j["factors"].size(), 4u);
    j = call_json({"jung", "--aut", "y, y^2 - x"});
    EXPECT_TRUE(j["henon"]["is_henon"].get<bool>());
    EXPECT_EQ(j["henon"]["dyn_degree"], 2);
    j = call_json({"noether", "--nu", "2"});
    EXPECT_EQ(j["profiles"], json::parse("[[1,1,1]]"));
}

TEST(Cli, VnSolveAndCatalog) {
    json j = call_json({"vn-solve", "--n", "7"});
    EXPECT_LT(j["residual"].get<double>(), 1e-10);
    EXPECT_TRUE(j["orbit_distinct"].get<bool>());
    EXPECT_EQ(call({"vn-solve", "--n", "7", "--guess", "5,5"}).code, cli::kDomainError);
    j = call_json({"catalog", "verify", "sigma"});
    EXPECT_TRUE(j["all_pass"].get<bool>());
    j = call_json({"catalog", "list"});
    EXPECT_GE(j["entries"].size(), 20u);
}
