#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ordh/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = ordh::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

const char* two_cos = R"({"n":1,"terms":[{"k":[-1],"re":1},{"k":[1],"re":1}]})";

} // namespace

TEST_CASE("verify on a small corpus passes and prints a hash")
{
    const Result r = run({"verify", "--corpus", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("report-hash: ") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("seminorm-chain") != std::string::npos);
}

TEST_CASE("verify output is deterministic")
{
    const Result a = run({"verify", "--corpus", "3", "--n", "2", "--seed", "5", "--format", "json"});
    const Result b = run({"verify", "--corpus", "3", "--n", "2", "--seed", "5", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Result c = run({"verify", "--corpus", "3", "--n", "2", "--seed", "6", "--format", "json"});
    CHECK(c.out != a.out);
}

TEST_CASE("verify under a functional order skips what needs chi_1")
{
    const Result r = run({"verify", "--order", "functional", "--corpus", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("SKIPPED") != std::string::npos);
    CHECK(r.out.find("NoMinimalPositive") != std::string::npos);
    const auto doc = nlohmann::json::parse(run({"verify", "--order", "functional", "--corpus", "3", "--format", "json"}).out);
    bool hilbert_ran = false;
    for (const auto& c : doc["checks"]) {
        if (c["name"] == "seminorm-chain" || c["name"] == "unitary-transfer" || c["name"] == "index-bijection")
            CHECK(c["status"] == "SKIPPED(NoMinimalPositive)");
        if (c["name"] == "hilbert-multiplier")
            hilbert_ran = c["status"] == "PASS";
    }
    CHECK(hilbert_ran);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"verify", "--bogus"}).code == 2);
    CHECK(run({"verify", "--order", "banana"}).code == 2);
    CHECK(run({"verify", "--corpus", "0"}).code == 2);
    CHECK(run({"verify", "--n", "1", "--box", "5000"}).code == 2);
    CHECK(run({"hankel-norm"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("corrupted symbol file exits with 2 and a parse diagnostic")
{
    const auto path = temp_file("ordh_cli_bad.json", R"({"n":1,"terms":[{"k":[1],)");
    const Result r = run({"bmo", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("parse error") != std::string::npos);
    CHECK(run({"hankel-norm", "/nonexistent/ordh.json"}).code == 2);
}

TEST_CASE("hankel-norm of 2 cos")
{
    const auto path = temp_file("ordh_cli_cos.json", two_cos);
    const Result r = run({"hankel-norm", path, "--format", "json", "--gamma"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["hankel_norm"].get<double>() == doctest::Approx(1.0));
    CHECK(doc["conj_hankel_norm"].get<double>() == doctest::Approx(1.0));
    CHECK(doc["seminorm"].get<double>() == doctest::Approx(2.0));
    CHECK(doc["gamma_norm"].get<double>() == doctest::Approx(1.0));
    CHECK(doc["nehari_holds"] == true);

    const Result csv = run({"hankel-norm", path, "--format", "csv"});
    CHECK(csv.out.rfind("hankel_norm,", 0) == 0);
}

TEST_CASE("hankel-norm of a constant is all zeros")
{
    const auto path = temp_file("ordh_cli_one.json", R"({"n":1,"terms":[{"k":[0],"re":1}]})");
    const auto doc = nlohmann::json::parse(run({"hankel-norm", path, "--format", "json"}).out);
    CHECK(doc["hankel_norm"] == 0.0);
    CHECK(doc["conj_hankel_norm"] == 0.0);
    CHECK(doc["seminorm"] == 0.0);
}

TEST_CASE("Gamma requests and bmo need a minimal positive element")
{
    const auto path = temp_file("ordh_cli_2d.json", R"({"n":2,"terms":[{"k":[0,-1],"re":1}]})");
    CHECK(run({"hankel-norm", path, "--order", "functional"}).code == 0);
    const Result g = run({"hankel-norm", path, "--order", "functional", "--gamma"});
    CHECK(g.code == 2);
    CHECK(g.err.find("NoMinimalPositive") != std::string::npos);
    CHECK(run({"bmo", path, "--order", "functional"}).code == 2);
}

TEST_CASE("bmo report and the JSON file option")
{
    const auto sym = temp_file("ordh_cli_cos2.json", two_cos);
    const auto out = (std::filesystem::temp_directory_path() / "ordh_cli_report.json").string();
    const Result r = run({"bmo", sym, "--json", out});
    CHECK(r.code == 0);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    std::ifstream in(out);
    const auto doc = nlohmann::json::parse(in);
    CHECK(doc["star_upper"].get<double>() == doctest::Approx(1.0));
    CHECK(doc["passed"] == true);
}

TEST_CASE("config file values apply unless a flag overrides them")
{
    const auto cfg = temp_file("ordh_cli_cfg.json", R"({"corpus": 2, "n": 1, "format": "csv"})");
    const Result r = run({"verify", "--config", cfg});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("name,n,status", 0) == 0);
    CHECK(r.out.find("seminorm-chain,1,") != std::string::npos);
    CHECK(r.out.find("seminorm-chain,2,") == std::string::npos);

    const Result flag = run({"verify", "--config", cfg, "--format", "text"});
    CHECK(flag.out.find("report-hash") != std::string::npos);

    const auto broken = temp_file("ordh_cli_cfg_bad.json", R"({"corpus": "many"})");
    CHECK(run({"verify", "--config", broken}).code == 2);
}

TEST_CASE("demo runs")
{
    const Result r = run({"demo"});
    CHECK(r.code == 0);
    CHECK(r.out.find("golden ratio") != std::string::npos);
}
