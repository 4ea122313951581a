#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "hyperring/cli.hpp"

using namespace hyperring;

namespace {

struct CliResult {
    int code = 0;
    Json report;
    std::string err;
    std::string raw;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult res;
    res.code = cli::run(args, out, err);
    res.raw = out.str();
    res.err = err.str();
    if (!res.raw.empty() && res.raw[0] == '{') res.report = Json::parse(res.raw);
    return res;
}

}  // namespace

TEST_CASE("validate succeeds on a catalog structure") {
    const CliResult res = run_cli({"validate", "--catalog", "ring-as-hyperring:z2"});
    CHECK(res.code == 0);
    CHECK(res.report.at("schema") == 1);
    CHECK(res.report.at("command") == "validate");
    CHECK(res.report.at("result").at("allPass") == true);
}

TEST_CASE("validate flags a broken structure from a file") {
    const std::string path = "bad_structure_test.hr";
    {
        std::ofstream f(path);
        f << R"({"q":2,"plus":[[[0],[1]],[[1],[1]]],"times":[[[0],[0]],[[0],[1]]]})";
    }
    const CliResult res = run_cli({"validate", path});
    CHECK(res.code == 1);
    CHECK(res.report.at("result").at("allPass") == false);
    CHECK_FALSE(res.report.at("witnesses").empty());
    std::remove(path.c_str());
}

TEST_CASE("closure reports the coset partition and quotient") {
    const CliResult res = run_cli({"closure", "--kind", "lambda-star-e", "--e", "1",
                                   "--catalog", "coset-hyperring:z4:0,2"});
    REQUIRE(res.code == 0);
    const Json classes = res.report.at("result").at("partition").at("classes");
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == Json::array({0, 2}));
    CHECK(classes[1] == Json::array({1, 3}));
    const Json quotient = res.report.at("result").at("quotient");
    CHECK(quotient.at("isRing") == true);
    CHECK(quotient.at("identityClass") == 1);
}

TEST_CASE("quotient adds the kernel fibers") {
    const CliResult res = run_cli({"quotient", "--kind", "lambda-star-e", "--e", "1",
                                   "--catalog", "coset-hyperring:z4:0,2"});
    REQUIRE(res.code == 0);
    CHECK(res.report.at("result").at("zeroFiber") == Json::array({0, 2}));
    CHECK(res.report.at("result").at("unitFiber") == Json::array({1, 3}));
}

TEST_CASE("parts rejects a subset that is not a union of classes") {
    const CliResult res = run_cli({"parts", "--e", "1", "--subset", "0,1",
                                   "--catalog", "coset-hyperring:z4:0,2"});
    CHECK(res.code == 1);
    REQUIRE(res.report.at("witnesses").size() == 1);
    CHECK(res.report.at("witnesses")[0].at("inside") == 0);
    CHECK(res.report.at("witnesses")[0].at("outside") == 2);
}

TEST_CASE("parts accepts a fundamental class") {
    const CliResult res = run_cli({"parts", "--e", "1", "--subset", "0,2",
                                   "--catalog", "coset-hyperring:z4:0,2"});
    CHECK(res.code == 0);
    CHECK(res.report.at("result").at("boundedPart") == true);
    CHECK(res.report.at("result").at("exactPart") == true);
}

TEST_CASE("relation evaluates expressions and lists splice partners") {
    const CliResult res = run_cli({"relation", "--kind", "lambda-times-e", "--e", "1",
                                   "--bounds", "n=2,k=2,run=1", "--expr", "1*1+1",
                                   "--catalog", "coset-hyperring:z4:0,2"});
    REQUIRE(res.code == 0);
    CHECK(res.report.at("result").at("exprValue") == Json::array({0, 2}));
    CHECK(res.report.at("result").at("relation").at("q") == 4);
    CHECK_FALSE(res.report.at("result").at("splicePartners").empty());
}

TEST_CASE("strong classifies and exits by verdict") {
    CHECK(run_cli({"strong", "--e", "1", "--catalog", "coset-hyperring:z4:0,2"}).code == 0);
    const CliResult res = run_cli({"strong", "--e", "0", "--catalog", "ring-as-hyperring:z2"});
    CHECK(res.code == 1);
    CHECK(res.report.at("result").at("strong") == false);
}

TEST_CASE("complete reports the unitary cross-checks") {
    const CliResult res = run_cli({"complete", "--n", "2", "--catalog", "ring-as-hyperring:z2"});
    CHECK(res.code == 0);
    CHECK(res.report.at("result").at("nComplete") == true);
    CHECK(res.report.at("result").at("unitary") == true);
    CHECK(res.report.at("result").at("corollaryAgrees") == true);

    const CliResult t1 = run_cli({"complete", "--n", "1", "--catalog", "total:2"});
    CHECK(t1.code == 1);
    CHECK(t1.report.at("result").at("nComplete") == false);
}

TEST_CASE("oracle agrees on catalog structures") {
    const CliResult res = run_cli({"oracle", "--catalog", "ring-as-hyperring:noncomm4"});
    CHECK(res.code == 0);
    CHECK(res.report.at("result").at("allAgree") == true);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"validate"}).code == 2);                      // no input
    CHECK(run_cli({"validate", "--nope"}).code == 2);            // unknown flag
    CHECK(run_cli({"relation", "--catalog", "total:2"}).code == 2);  // missing --kind
    CHECK(run_cli({"closure", "--kind", "lambda-star-e", "--catalog", "total:2"}).code == 2);
    CHECK(run_cli({"validate", "missing_file.hr"}).code == 2);
    CHECK(run_cli({"validate", "--catalog", "total:nope"}).code == 2);
    CHECK(run_cli({"validate", "--catalog", "total:2", "--format", "yaml"}).code == 2);
}

TEST_CASE("text format mirrors the json report") {
    const CliResult res = run_cli({"validate", "--catalog", "total:2", "--format", "text"});
    CHECK(res.code == 0);
    CHECK(res.raw.find("command: \"validate\"") != std::string::npos);
    CHECK(res.raw.find("allPass: true") != std::string::npos);
}

TEST_CASE("demo is deterministic and green") {
    const CliResult first = run_cli({"demo"});
    CHECK(first.code == 0);
    CHECK(first.report.at("result").at("allGreen") == true);
    const CliResult second = run_cli({"demo"});
    CHECK(first.raw == second.raw);
}
