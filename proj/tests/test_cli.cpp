#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "litgame/cli.hpp"
#include "litgame/errors.hpp"
#include "litgame/inference.hpp"

using namespace litgame;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("litgame_test_" + name);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* const kScenarioTable =
    "scenario                prior     sensitivity  specificity  p_positive  ppv\n"
    "non-random/risk-averse  0.900000  0.900000     0.900000     0.820000    0.987805\n"
    "non-random/risk-loving  0.600000  0.900000     0.900000     0.580000    0.931034\n"
    "random/risk-averse      0.900000  0.500000     0.500000     0.500000    0.900000\n"
    "random/risk-loving      0.600000  0.500000     0.500000     0.500000    0.600000\n";

}  // namespace

TEST_CASE("scenarios: golden table") {
    const auto r = invoke({"scenarios"});
    CHECK(r.code == 0);
    CHECK(r.out == kScenarioTable);
    CHECK(invoke({"scenarios"}).out == r.out);
}

TEST_CASE("scenarios: name filter") {
    auto r = invoke({"scenarios", "--name", "random/risk-loving"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "scenario            prior     sensitivity  specificity  p_positive  ppv\n"
          "random/risk-loving  0.600000  0.500000     0.500000     0.500000    0.600000\n");

    r = invoke({"scenarios", "--name", "nonexistent"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
}

TEST_CASE("scenarios: json and csv") {
    auto r = invoke({"scenarios", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.size() == 4);
    CHECK(doc[0]["name"] == "non-random/risk-averse");
    CHECK(doc[3]["ppv"].get<double>() == doctest::Approx(0.6).epsilon(1e-12));

    r = invoke({"scenarios", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("name,prior,sensitivity,specificity,p_positive,ppv\n", 0) == 0);
    CHECK(r.out.find("random/risk-averse,0.9,0.5,0.5,0.5,0.9\n") != std::string::npos);
}

TEST_CASE("posterior: table") {
    const auto r = invoke({"posterior", "--prior", "0.9", "--sensitivity", "0.9", "--specificity", "0.9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ppv                        0.987805\n") != std::string::npos);
    CHECK(r.out.find("p_positive                 0.820000\n") != std::string::npos);
    CHECK(r.out.find("lr_positive                9.000000\n") != std::string::npos);
}

TEST_CASE("posterior: absent and infinite fields") {
    const auto r = invoke({"posterior", "--prior", "1", "--sensitivity", "1", "--specificity", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("npv                        -\n") != std::string::npos);
    CHECK(r.out.find("lr_positive                inf\n") != std::string::npos);

    const auto j = invoke({"posterior", "--prior", "1", "--sensitivity", "1", "--specificity", "1", "--format", "json"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["npv"].is_null());
    CHECK(doc["lr_positive"] == "inf");
}

TEST_CASE("posterior: undefined posterior exits 1") {
    const auto r = invoke({"posterior", "--prior", "0", "--sensitivity", "0", "--specificity", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("UndefinedPosterior") != std::string::npos);
    CHECK(r.err.find('\n') == r.err.size() - 1);
}

TEST_CASE("posterior: json round-trips through re-evaluation") {
    const auto r = invoke({"posterior", "--prior", "0.3", "--sensitivity", "0.8", "--specificity", "0.7",
                           "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["ppv"].get<double>() == doctest::Approx(8.0 / 15.0).epsilon(1e-12));

    const PriorBelief prior(doc["prior"]["p_guilty"].get<double>());
    const TestCharacteristics chars(doc["chars"]["sensitivity"].get<double>(),
                                    doc["chars"]["specificity"].get<double>());
    const auto again = full_report(prior, chars);
    CHECK(doc["p_positive"].get<double>() == again.p_positive.value());
    CHECK(doc["ppv"].get<double>() == again.ppv->value());
    CHECK(doc["p_innocent_given_positive"].get<double>() == again.p_innocent_given_positive->value());
    CHECK(doc["npv"].get<double>() == again.npv->value());
    CHECK(doc["p_guilty_given_negative"].get<double>() == again.p_guilty_given_negative->value());
    CHECK(doc["lr_positive"].get<double>() == again.lr_positive.value());
    CHECK(doc["lr_negative"].get<double>() == again.lr_negative.value());

    // Re-rendering from the parsed values is byte-identical.
    const auto r2 = invoke({"posterior", "--prior", doc["prior"]["p_guilty"].dump(), "--sensitivity",
                            doc["chars"]["sensitivity"].dump(), "--specificity", doc["chars"]["specificity"].dump(),
                            "--format", "json"});
    CHECK(r2.out == r.out);
}

TEST_CASE("posterior: csv") {
    const auto r = invoke({"posterior", "--prior", "0.9", "--sensitivity", "0.9", "--specificity", "1", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "prior,sensitivity,specificity,p_positive,ppv,p_innocent_given_positive,npv,p_guilty_given_negative,"
          "lr_positive,lr_negative\n"
          "0.9,0.9,1,0.81,1,0,0.5263157894736843,0.4736842105263157,inf,0.09999999999999998\n");
}

TEST_CASE("posterior: usage errors exit 2") {
    CHECK(invoke({"posterior", "--prior", "0.9", "--sensitivity", "0.9"}).code == 2);
    CHECK(invoke({"posterior", "--prior", "abc", "--sensitivity", "0.9", "--specificity", "0.9"}).code == 2);
    CHECK(invoke({"posterior", "--prior", "1.5", "--sensitivity", "0.9", "--specificity", "0.9"}).code == 2);
    CHECK(invoke({"posterior", "--prior", "0.5", "--sensitivity", "0.9", "--specificity", "0.9", "--format", "xml"})
              .code == 2);
    CHECK(invoke({"posterior", "--bogus"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
}

TEST_CASE("help exits 0") {
    const auto r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("posterior") != std::string::npos);
}

TEST_CASE("posterior: --config with flag overrides") {
    const auto path = temp_file("config.txt");
    {
        std::ofstream f(path);
        f << "# custom\nsensitivity = 0.8\nspecificity = 0.7\nprior = 0.3\n";
    }
    auto r = invoke({"posterior", "--config", path.string(), "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["ppv"].get<double>() == doctest::Approx(8.0 / 15.0));

    r = invoke({"posterior", "--config", path.string(), "--prior", "0.9", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["prior"]["p_guilty"].get<double>() == 0.9);
    CHECK(doc["chars"]["sensitivity"].get<double>() == 0.8);

    {
        std::ofstream f(path);
        f << "regime = random\nprofile = risk-averse\n";
    }
    r = invoke({"posterior", "--config", path.string()});
    CHECK(r.out.find("ppv                        0.900000\n") != std::string::npos);

    {
        std::ofstream f(path);
        f << "regime = random\nprior = 0.2\n";
    }
    CHECK(invoke({"posterior", "--config", path.string()}).code == 2);
    std::filesystem::remove(path);

    CHECK(invoke({"posterior", "--config", temp_file("missing/nowhere.txt").string()}).code == 1);
}

TEST_CASE("simulate") {
    SUBCASE("catalog scenario at 10^6 trials") {
        const auto r = invoke({"simulate", "--scenario", "non-random/risk-averse", "--trials", "1000000", "--seed", "42"});
        CHECK(r.code == 0);
        CHECK(r.out.find("true_positive       810103\n") != std::string::npos);
        CHECK(r.out.find("false_positive      9964\n") != std::string::npos);
        CHECK(r.out.find("analytic_ppv        0.987805\n") != std::string::npos);
        CHECK(r.out.find("agreement           PASS\n") != std::string::npos);
    }
    SUBCASE("deterministic chain") {
        const auto r = invoke({"simulate", "--prior", "1", "--sensitivity", "1", "--specificity", "1", "--trials",
                               "10", "--seed", "7", "--format", "json"});
        CHECK(r.code == 0);
        const auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["counts"]["true_positive"] == 10);
        CHECK(doc["counts"]["false_positive"] == 0);
        CHECK(doc["counts"]["true_negative"] == 0);
        CHECK(doc["counts"]["false_negative"] == 0);
        CHECK(doc["agreement"] == "PASS");
    }
    SUBCASE("chunking and threads do not change output") {
        const auto a = invoke({"simulate", "--scenario", "random/risk-loving", "--trials", "20000", "--chunk-size", "1",
                               "--threads", "1", "--format", "csv"});
        const auto b = invoke({"simulate", "--scenario", "random/risk-loving", "--trials", "20000", "--chunk-size",
                               "17", "--threads", "3", "--format", "csv"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    SUBCASE("failed agreement exits 1") {
        const auto r = invoke({"simulate", "--scenario", "non-random/risk-averse", "--trials", "10000", "--z", "1e-9"});
        CHECK(r.code == 1);
        CHECK(r.out.find("FAIL") != std::string::npos);
    }
    SUBCASE("no positives exits 1") {
        CHECK(invoke({"simulate", "--prior", "0", "--sensitivity", "0.5", "--specificity", "1", "--trials", "10"}).code ==
              1);
    }
    SUBCASE("flag errors exit 2") {
        CHECK(invoke({"simulate", "--trials", "0"}).code == 2);
        CHECK(invoke({"simulate", "--scenario", "random/risk-loving", "--trials", "0"}).code == 2);
        CHECK(invoke({"simulate", "--scenario", "random/risk-loving", "--trials", "-5"}).code == 2);
        CHECK(invoke({"simulate", "--scenario", "random/risk-loving", "--z", "0"}).code == 2);
        CHECK(invoke({"simulate", "--scenario", "random/risk-loving", "--chunk-size", "0"}).code == 2);
        CHECK(invoke({"simulate", "--scenario", "no/such"}).code == 2);
        CHECK(invoke({"simulate", "--prior", "0.5"}).code == 2);
    }
}

TEST_CASE("sweep") {
    SUBCASE("prior slice to stdout") {
        const auto r = invoke({"sweep", "--prior", "0.6:0.9:0.3", "--sensitivity", "0.9", "--specificity", "0.9"});
        CHECK(r.code == 0);
        CHECK(r.out ==
              "prior,sensitivity,specificity,p_positive,ppv,npv\n"
              "0.6,0.9,0.9,0.5800000000000001,0.9310344827586207,0.8571428571428572\n"
              "0.9,0.9,0.9,0.8200000000000001,0.9878048780487805,0.5\n");
    }
    SUBCASE("single point to a file") {
        const auto path = temp_file("point.csv");
        const auto r = invoke({"sweep", "--prior", "0.5", "--sensitivity", "0.5", "--specificity", "0.5", "--out",
                               path.string()});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        CHECK(slurp(path) == "prior,sensitivity,specificity,p_positive,ppv,npv\n0.5,0.5,0.5,0.5,0.5,0.5\n");
        std::filesystem::remove(path);
    }
    SUBCASE("11^3 lattice") {
        const auto path = temp_file("cube.csv");
        const auto r = invoke({"sweep", "--prior", "0:1:0.1", "--sensitivity", "0:1:0.1", "--specificity", "0:1:0.1",
                               "--out", path.string()});
        CHECK(r.code == 0);
        std::istringstream lines(slurp(path));
        std::string line;
        std::size_t count = 0;
        while (std::getline(lines, line)) ++count;
        CHECK(count == 1332);
        std::filesystem::remove(path);
    }
    SUBCASE("errors") {
        CHECK(invoke({"sweep", "--prior", "0:1", "--sensitivity", "0.9", "--specificity", "0.9"}).code == 2);
        CHECK(invoke({"sweep", "--prior", "0:1:0.1", "--sensitivity", "0.9"}).code == 2);
        CHECK(invoke({"sweep", "--prior", "0:1:0.1", "--sensitivity", "0.9", "--specificity", "0.9", "--format",
                      "json"})
                  .code == 2);
        CHECK(invoke({"sweep", "--prior", "0:1:0.001", "--sensitivity", "0:1:0.001", "--specificity", "0.9"}).code ==
              1);
        CHECK(invoke({"sweep", "--prior", "0:1:0.1", "--sensitivity", "0:1:0.1", "--specificity", "0.9",
                      "--max-cells", "100"})
                  .code == 1);
        const auto r = invoke({"sweep", "--prior", "0.5", "--sensitivity", "0.9", "--specificity", "0.9", "--out",
                               temp_file("missing/dir/out.csv").string()});
        CHECK(r.code == 1);
        CHECK(r.err.find("No such file or directory") != std::string::npos);
    }
}

TEST_CASE("invert") {
    auto r = invoke({"invert", "--sensitivity", "0.9", "--specificity", "0.9", "--target", "0.987805", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["required_prior"].get<double>() == doctest::Approx(0.9).epsilon(1e-5));

    r = invoke({"invert", "--sensitivity", "0.5", "--specificity", "0.5", "--target", "0.6"});
    CHECK(r.code == 0);
    CHECK(r.out == "required_prior  0.600000\n");

    r = invoke({"invert", "--sensitivity", "0", "--specificity", "0.9", "--target", "0.5"});
    CHECK(r.code == 1);
    CHECK(invoke({"invert", "--sensitivity", "0.9", "--specificity", "0.9", "--target", "1"}).code == 1);
    CHECK(invoke({"invert", "--sensitivity", "0.9", "--specificity", "0.9"}).code == 2);
    CHECK(invoke({"invert", "--sensitivity", "0.9", "--specificity", "0.9", "--target", "2"}).code == 2);
}

TEST_CASE("invert over an axis prints a break-even curve") {
    const auto r = invoke({"invert", "--sensitivity", "0:1:0.5", "--specificity", "0.9", "--target", "0.95"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "sensitivity  specificity  required_prior\n"
          "0.000000     0.900000     unreachable\n"
          "0.500000     0.900000     0.791667\n"
          "1.000000     0.900000     0.655172\n");
}

TEST_CASE("classify maps every error family onto its exit code") {
    auto code = [](auto&& ex) { return cli::classify(std::make_exception_ptr(ex)); };
    CHECK(code(UndefinedPosterior("x")) == cli::ExitStatus::DomainFailure);
    CHECK(code(UnreachableTarget("x")) == cli::ExitStatus::DomainFailure);
    CHECK(code(GridTooLarge("x")) == cli::ExitStatus::DomainFailure);
    CHECK(code(IoError("x")) == cli::ExitStatus::DomainFailure);
    CHECK(code(NoPositives("x")) == cli::ExitStatus::DomainFailure);
    CHECK(code(ParseError("x")) == cli::ExitStatus::UsageError);
    CHECK(code(AmbiguousScenario("x")) == cli::ExitStatus::UsageError);
    CHECK(code(ValidationError("x")) == cli::ExitStatus::UsageError);
    CHECK(code(InvariantViolation("x")) == cli::ExitStatus::InternalError);
    CHECK(code(std::runtime_error("x")) == cli::ExitStatus::InternalError);
}
