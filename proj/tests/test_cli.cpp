#include "oracles.hpp"

#include "stieltjes/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace stj;
using nlohmann::json;
using testutil::ref;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// Field-by-field check of the verify report layout.
void check_report_schema(const json& j)
{
    REQUIRE(j.is_object());
    REQUIRE(j.contains("context"));
    CHECK(j["context"]["digits"].is_number_integer());
    REQUIRE(j["entries"].is_array());
    for (const json& e : j["entries"]) {
        for (const char* key : {"id", "paper_anchor", "lhs", "rhs", "abs_error", "tolerance"}) {
            CAPTURE(key);
            REQUIRE(e.contains(key));
            CHECK(e[key].is_string());
        }
        CHECK(e["pass"].is_boolean());
        CHECK(e["elapsed_ms"].is_number_integer());
        // Decimal strings, never binary floats.
        CHECK_NOTHROW(parse_real(e["lhs"].get<std::string>()));
        CHECK_NOTHROW(parse_real(e["abs_error"].get<std::string>()));
    }
    REQUIRE(j["summary"].is_object());
    for (const char* key : {"total", "passed", "failed"}) {
        CAPTURE(key);
        CHECK(j["summary"][key].is_number_integer());
    }
}

} // namespace

TEST_CASE("compute")
{
    Run r = run({"compute", "gamma_n", "--n", "1", "--u", "1", "--method", "hasse", "--digits", "20"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("-7.2815845483676724861e-02") != std::string::npos);
    CHECK(r.out.find("route=hasse_sum") != std::string::npos);

    Run d = run({"compute", "digamma", "--u", "0.5"});
    REQUIRE(d.code == exit_ok);
    PrecisionScope scope(50);
    Real expected = -ref(frozen::gamma_n[0]) - 2 * ln2();
    CHECK(d.out.find(to_decimal(expected, 30)) != std::string::npos);

    Run j = run({"--format", "json", "compute", "log_gamma", "--u", "0.25", "--method", "binet1"});
    REQUIRE(j.code == exit_ok);
    json v = json::parse(j.out);
    CHECK(v["function"] == "log_gamma");
    CHECK(v["route"] == "binet1");
    CHECK(agreed_digits(parse_real(v["value"].get<std::string>()), ref(frozen::lgamma_quarter), 40) >= 29);

    Run csv = run({"compute", "barnes_g", "--t", "1", "--format", "csv"});
    CHECK(csv.code == exit_ok);
    CHECK(csv.out.rfind("function,argument,value,route\n", 0) == 0);
}

TEST_CASE("printed values re-parse to the printed digits")
{
    Run r = run({"--format", "json", "compute", "trigamma", "--u", "0.5", "--digits", "40"});
    REQUIRE(r.code == exit_ok);
    json v = json::parse(r.out);
    PrecisionScope scope(60);
    Real back = parse_real(v["value"].get<std::string>());
    CHECK(agreed_digits(back, ref(frozen::trigamma_half), 45) >= 39);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({"compute", "gamma_n", "--n", "0", "--u", "-1"}).code == exit_usage);
    CHECK(run({"compute", "digamma", "--u", "abc"}).code == exit_usage);
    CHECK(run({"compute", "nosuch"}).code == exit_usage);
    CHECK(run({"compute", "gamma_n", "--method", "nosuch"}).code == exit_usage);
    CHECK(run({"compute", "hurwitz_zeta", "--s", "1"}).code == exit_usage);
    CHECK(run({"table", "--first", "26"}).code == exit_usage);
    CHECK(run({"table", "--first", "0"}).code == exit_usage);
    CHECK(run({"verify", "--tag", "nonsense"}).code == exit_usage);
    CHECK(run({"verify", "--id", "I-0.0"}).code == exit_usage);
    CHECK(run({"verify"}).code == exit_usage);
    CHECK(run({"--digits", "5", "compute", "digamma"}).code == exit_usage);
    CHECK(run({"--digits", "201", "compute", "digamma"}).code == exit_usage);
    CHECK(run({"--format", "xml", "compute", "digamma"}).code == exit_usage);
    CHECK(run({}).code == exit_usage);
}

TEST_CASE("table")
{
    Run one = run({"table", "--first", "1", "--format", "csv", "--digits", "15"});
    REQUIRE(one.code == exit_ok);
    CHECK(one.out.rfind("n,value,routes_agreeing_digits\n0,5.77215664901533e-01,", 0) == 0);

    Run three = run({"table", "--first", "3", "--format", "json", "--digits", "15"});
    REQUIRE(three.code == exit_ok);
    json t = json::parse(three.out);
    REQUIRE(t["rows"].size() == 3);
    CHECK(t["rows"][2]["value"].get<std::string>().rfind("-9.69036", 0) == 0);
    for (const json& row : t["rows"])
        CHECK(row["routes_agreeing_digits"].get<int>() >= 15);
}

TEST_CASE("verify")
{
    Run r = run({"verify", "--id", "I-6.21", "--format", "json"});
    REQUIRE(r.code == exit_ok);
    json j = json::parse(r.out);
    check_report_schema(j);
    REQUIRE(j["entries"].size() == 1);
    CHECK(j["entries"][0]["id"] == "I-6.21");
    CHECK(j["entries"][0]["pass"] == true);
    CHECK(j["summary"]["failed"] == 0);

    // A printed sign that does not hold makes verify exit 1.
    Run bad = run({"verify", "--id", "I-9.1", "--id", "I-9.1s", "--format", "json"});
    CHECK(bad.code == exit_verify_failed);
    json b = json::parse(bad.out);
    check_report_schema(b);
    REQUIRE(b["entries"].size() == 2);
    CHECK(b["entries"][0]["pass"] == false);
    CHECK(b["entries"][1]["pass"] == true);
    CHECK(b["summary"]["failed"] == 1);

    Run text = run({"verify", "--id", "I-9.1"});
    CHECK(text.out.find("FAIL I-9.1") != std::string::npos);
    CHECK(text.out.find("lhs=") != std::string::npos);
}

TEST_CASE("--out writes to a file")
{
    const std::string path = "cli_out_test.csv";
    std::remove(path.c_str());
    Run r = run({"--out", path, "compute", "digamma", "--u", "1", "--format", "csv", "--digits", "10"});
    REQUIRE(r.code == exit_ok);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "function,argument,value,route");
    std::remove(path.c_str());
}
