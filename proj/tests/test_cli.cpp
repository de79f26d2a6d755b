#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "addiword/cli.hpp"
#include "addiword/io.hpp"
#include "rng.hpp"
#include "schema_check.hpp"

using namespace addiword;
using nlohmann::json;

namespace {

const json& report_schema() {
    static const json sch = [] {
        std::ifstream in(ADDIWORD_SOURCE_DIR "/docs/report.schema.json");
        REQUIRE(in.good());
        json s;
        in >> s;
        return s;
    }();
    return sch;
}

struct CliResult {
    int exit_code = 0;
    json report;
    std::string stdout_text;
    std::string stderr_text;
};

CliResult invoke(const std::vector<std::string>& args, bool expect_report = true) {
    std::ostringstream out, err;
    CliResult r;
    r.exit_code = run(args, out, err);
    r.stdout_text = out.str();
    r.stderr_text = err.str();
    if (expect_report) {
        REQUIRE_MESSAGE(!r.stdout_text.empty(), ("no report for: " + args.front()));
        r.report = json::parse(r.stdout_text);
        std::string why;
        const bool ok = schema::validate(r.report, report_schema(), why);
        CHECK_MESSAGE(ok, ("schema violation (" + why + ") in: " + r.stdout_text));
    }
    return r;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("word parsing") {
    CHECK(parse_word_input("2 1 3 5 1 2 6").letters ==
          std::vector<Letter>{2, 1, 3, 5, 1, 2, 6});
    CHECK(parse_word_input("# note\n1, 2").letters == std::vector<Letter>{1, 2});
    CHECK(parse_word_input("").letters.empty());
    CHECK(parse_word_input("  # only a comment\n\n").letters.empty());
    CHECK(parse_word_input("-4,,7\n8").letters == std::vector<Letter>{-4, 7, 8});
    try {
        parse_word_input("1 x 2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 3);
    }
    try {
        parse_word_input("1 2\n3 4badtoken");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("format and parse round-trip") {
    testrng::Rng rng(808);
    const std::vector<Letter> symbols{-9, -1, 0, 3, 12345};
    for (int round = 0; round < 100; ++round) {
        const Word w = testrng::random_word(rng, rng() % 30, symbols);
        CHECK(parse_word_input(format_word(w)).letters == w.letters);
    }
}

TEST_CASE("detect reports the running example with 1-based halves") {
    const auto r = invoke({"detect", "--pattern", "additive-square", "--word", "2 1 3 5 1 2 6"});
    CHECK(r.exit_code == 0);
    CHECK(r.report["status"] == "found");
    const auto& blocks = r.report["result"]["blocks"];
    CHECK(blocks[0]["start"] == 2);
    CHECK(blocks[0]["len"] == 3);
    CHECK(blocks[0]["sum"] == 9);
    CHECK(blocks[1]["start"] == 5);
    CHECK(blocks[1]["len"] == 3);
    CHECK(blocks[1]["sum"] == 9);
}

TEST_CASE("detect exit codes") {
    CHECK(invoke({"detect", "--word", "1 2"}).exit_code == 1);
    CHECK(invoke({"detect", "--word", "1 2"}).report["status"] == "not-found");
    const auto bad = invoke({"frobnicate"}, false);
    CHECK(bad.exit_code == 2);
    CHECK(invoke({}, false).exit_code == 2);
}

TEST_CASE("detect reads word files with comments") {
    const std::string path = "cli_word_input.txt";
    {
        std::ofstream f(path);
        f << "# running example\n2 1 3, 5\n1 2 6\n";
    }
    const auto r = invoke({"detect", "--file", path});
    CHECK(r.exit_code == 0);
    CHECK(r.report["input"]["length"] == 7);
    std::remove(path.c_str());
}

TEST_CASE("parse failures produce an error report and exit 2") {
    const auto r = invoke({"detect", "--word", "1 x 2"});
    CHECK(r.exit_code == 2);
    CHECK(r.report["status"] == "error");
    CHECK(r.stderr_text.find("x") != std::string::npos);
}

TEST_CASE("theorem1 subcommand") {
    std::string long_word;
    for (int i = 0; i < 50; ++i) long_word += "2 1 3 5 1 2 6 ";
    const auto r = invoke({"theorem1", "--min-block-len", "3", "--word", long_word});
    CHECK(r.exit_code == 0);
    const auto& res = r.report["result"];
    CHECK(res["bound_c"] == 12);
    CHECK(res["discrepancy"].get<long long>() <= 12);
    CHECK(res["u"]["len"] == res["v"]["len"]);
    CHECK(res["u"]["len"].get<long long>() >= 3);
    CHECK(res["k"].get<long long>() >= 3);

    const auto miss = invoke({"theorem1", "--min-block-len", "10", "--word", "1 2"});
    CHECK(miss.exit_code == 1);
    CHECK(miss.report["status"] == "not-found");
}

TEST_CASE("theorem2 subcommand writes an SVG when asked") {
    const std::string svg_path = "cli_path_plot.svg";
    const auto r = invoke(
        {"theorem2", "--k", "2", "--svg", svg_path, "--word", "1 3 2 2"});
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["common_average"] == "2/1");
    CHECK(r.report["result"]["indices"] == json::array({0, 2, 3}));
    std::ifstream svg(svg_path);
    REQUIRE(svg.good());
    std::stringstream buf;
    buf << svg.rdbuf();
    const std::string text = buf.str();
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("<polyline") != std::string::npos);
    std::size_t circles = 0, pos = 0;
    while ((pos = text.find("<circle", pos)) != std::string::npos) {
        ++circles;
        pos += 7;
    }
    CHECK(circles == 3);  // k+1 chosen points
    std::remove(svg_path.c_str());

    CHECK(invoke({"theorem2", "--k", "2", "--word", "1 2"}).exit_code == 1);
}

TEST_CASE("theorem2 honors the point cap") {
    std::string word;
    for (int i = 0; i < 30; ++i) word += (i % 2 ? "1 " : "2 ");
    const auto r = invoke({"theorem2", "--k", "2", "--max-points", "10", "--word", word});
    // The capped prefix is searched; the cap is reported on stderr.
    CHECK(r.stderr_text.find("cap") != std::string::npos);
}

TEST_CASE("search subcommand") {
    const auto r = invoke({"search", "--alphabet", "1,2", "--count-at", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.report["status"] == "found");
    CHECK(r.report["result"]["verdict"] == "exhausted");
    CHECK(r.report["result"]["g"] == 3);
    CHECK(r.report["result"]["witness"] == json::array({1, 2, 1}));
    CHECK(r.report["result"]["count_at"]["count"] == 2);

    const auto capped = invoke({"search", "--alphabet", "0,1,3,4", "--pattern", "additive-cube",
                                "--depth-budget", "25"});
    CHECK(capped.exit_code == 1);
    CHECK(capped.report["status"] == "budget-exceeded");
    CHECK(capped.report["result"]["depth_reached"] == 25);

    CHECK(invoke({"search", "--pattern", "additive-square"}, false).exit_code == 2);
}

TEST_CASE("ap subcommand") {
    const auto r = invoke({"ap", "--word", "1 2 4 5 7"});
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["i"] == 1);
    CHECK(r.report["result"]["j"] == 3);
    CHECK(r.report["result"]["k"] == 5);
    CHECK(r.report["result"]["values"] == json::array({1, 4, 7}));
    CHECK(invoke({"ap", "--word", "1 2 4"}).exit_code == 1);
}

TEST_CASE("encode subcommand") {
    const auto r = invoke({"encode", "--word", "2 1 3"});
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["bits"] == "110101110");
    CHECK(r.report["result"]["offset"] == 0);
    const auto shifted = invoke({"encode", "--word", "-2 0 3"});
    CHECK(shifted.report["result"]["offset"] == 3);
    CHECK(shifted.report["result"]["bits"] == "1011101111110");  // 1 3 6
}

TEST_SUITE_END();
