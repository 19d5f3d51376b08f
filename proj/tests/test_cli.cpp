#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "scmap/cli.hpp"

using namespace scmap;

TEST_SUITE_BEGIN("cli");

namespace {

ParseResult parse(std::initializer_list<const char*> args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv = {"scmap"};
    argv.insert(argv.end(), args.begin(), args.end());
    return parse_args(static_cast<int>(argv.size()), argv.data(), out, err);
}

ParseResult parse(std::initializer_list<const char*> args)
{
    std::ostringstream out, err;
    return parse(args, out, err);
}

int run_to_string(const RunConfig& config, std::string& captured)
{
    std::ostringstream out, err;
    const int status = run(config, out, err);
    captured = out.str() + err.str();
    return status;
}

} // namespace

TEST_CASE("defaults reproduce the benchmark setup")
{
    const auto parsed = parse({"table1"});
    REQUIRE(parsed.config.has_value());
    const auto& c = *parsed.config;
    CHECK(c.command == RunConfig::Command::table1);
    CHECK(c.delta_list == std::vector<double>{0.001, 0.005, 0.010, 0.020, 0.025});
    CHECK(c.dims == std::vector<int>{3, 5});
    CHECK(c.states == 4);
    CHECK(c.tolerance == 5e-7);
    CHECK(c.output_format == OutputFormat::pretty);
    CHECK_FALSE(c.output_path.has_value());
}

TEST_CASE("malformed flags yield usage status 2")
{
    std::ostringstream out, err;
    SUBCASE("unknown option")
    {
        const auto parsed = parse({"table1", "--no-such-flag"}, out, err);
        CHECK_FALSE(parsed.config.has_value());
        CHECK(parsed.exit_code == 2);
        CHECK(err.str().find("usage error") != std::string::npos);
    }
    SUBCASE("missing subcommand")
    {
        const auto parsed = parse({}, out, err);
        CHECK_FALSE(parsed.config.has_value());
        CHECK(parsed.exit_code == 2);
    }
    SUBCASE("bad format value")
    {
        const auto parsed = parse({"table1", "--format", "xml"}, out, err);
        CHECK_FALSE(parsed.config.has_value());
        CHECK(parsed.exit_code == 2);
    }
    SUBCASE("help exits cleanly")
    {
        const auto parsed = parse({"--help"}, out, err);
        CHECK_FALSE(parsed.config.has_value());
        CHECK(parsed.exit_code == 0);
        CHECK(out.str().find("table1") != std::string::npos);
    }
}

TEST_CASE("config validation failures yield status 2")
{
    RunConfig config;
    config.command = RunConfig::Command::table1;
    config.delta_list = {};
    std::string text;
    CHECK(run_to_string(config, text) == 2);

    config.delta_list = {0.001};
    config.states = 9;
    CHECK(run_to_string(config, text) == 2);

    config.states = 4;
    config.tolerance = -1.0;
    CHECK(run_to_string(config, text) == 2);
}

TEST_CASE("solve emits the hydrogen doublet")
{
    auto parsed = parse({"solve", "--dim", "3", "--ell", "0", "--delta", "0", "--states", "2", "--format", "csv"});
    REQUIRE(parsed.config.has_value());
    std::string text;
    REQUIRE(run_to_string(*parsed.config, text) == 0);
    CHECK(text.find("-0.500000") != std::string::npos);
    CHECK(text.find("-0.125000") != std::string::npos);
    CHECK(text.find("delta,N,ell,n,energy,flag") == 0);
}

TEST_CASE("csv output round-trips byte-identically")
{
    auto parsed = parse({"solve", "--dim", "3", "--ell", "1", "--delta", "0.005", "--states", "2", "--format", "csv"});
    REQUIRE(parsed.config.has_value());
    std::string text;
    REQUIRE(run_to_string(*parsed.config, text) == 0);
    const auto records = parse_table1_csv(text);
    CHECK(to_csv(records) == text);
}

TEST_CASE("identical configs give byte-identical output")
{
    auto parsed = parse({"table2", "--delta", "0.005", "--format", "csv"});
    REQUIRE(parsed.config.has_value());
    std::string first, second;
    REQUIRE(run_to_string(*parsed.config, first) == 0);
    REQUIRE(run_to_string(*parsed.config, second) == 0);
    CHECK(first == second);

    const auto records = parse_table2_csv(first);
    CHECK(to_csv(records) == first);
    REQUIRE(records.size() == 3);
    CHECK(std::abs(records[1].ehat_exact - 5.772012) < 1e-5);
}

TEST_CASE("json output is well formed with numeric fields")
{
    auto parsed = parse({"solve", "--dim", "3", "--ell", "0", "--delta", "0", "--states", "1", "--format", "json"});
    REQUIRE(parsed.config.has_value());
    std::string text;
    REQUIRE(run_to_string(*parsed.config, text) == 0);
    const auto doc = nlohmann::json::parse(text);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["energy"].is_number());
    CHECK(doc[0]["N"] == 3);
    CHECK(std::abs(doc[0]["energy"].get<double>() - (-0.5)) < 1e-6);
}

TEST_CASE("unconvergeable tolerance yields status 1")
{
    RunConfig config;
    config.command = RunConfig::Command::solve;
    config.delta_list = {0.01};
    config.dimension = 3;
    config.ell = 0;
    config.states = 1;
    config.tolerance = 1e-15;
    std::string text;
    CHECK(run_to_string(config, text) == 1);
    CHECK(text.find("convergence failure") != std::string::npos);
}

TEST_CASE("susy-point reports the constraint root")
{
    auto parsed = parse({"susy-point", "--format", "csv"});
    REQUIRE(parsed.config.has_value());
    std::string text;
    REQUIRE(run_to_string(*parsed.config, text) == 0);
    CHECK(text.find("e2,M,delta,res1,res2,iterations") == 0);
    CHECK(text.find("5.2726008345") != std::string::npos);
    CHECK(text.find("0.2781513645") != std::string::npos);
}

TEST_CASE("map emits the four-dimensional image")
{
    auto parsed = parse({"map", "--dim", "3", "--ell", "1", "--delta", "0.005", "--format", "json"});
    REQUIRE(parsed.config.has_value());
    std::string text;
    REQUIRE(run_to_string(*parsed.config, text) == 0);
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc[0]["N_prime"] == 4);
    CHECK(doc[0]["L"] == 2);
    CHECK(doc[0]["M_prime"] == 8);
    CHECK(doc[0]["E0"].get<double>() < 0.0);
    CHECK(std::abs(doc[0]["Ehat_exact"].get<double>() - 5.772012) < 5e-5);
}

TEST_CASE("output path writes the same bytes as stdout")
{
    auto parsed = parse({"solve", "--dim", "3", "--ell", "0", "--delta", "0", "--states", "1", "--format", "csv"});
    REQUIRE(parsed.config.has_value());
    std::string direct;
    REQUIRE(run_to_string(*parsed.config, direct) == 0);

    auto config = *parsed.config;
    config.output_path = "cli_test_output.csv";
    std::ostringstream out, err;
    REQUIRE(run(config, out, err) == 0);
    std::ifstream file("cli_test_output.csv", std::ios::binary);
    std::stringstream content;
    content << file.rdbuf();
    CHECK(content.str() == direct);
    std::remove("cli_test_output.csv");
}

TEST_SUITE_END();
