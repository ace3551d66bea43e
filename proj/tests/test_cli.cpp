#include <doctest.h>

#include <sstream>

#include "cpf/cli.hpp"
#include "cpf/json_io.hpp"
#include "cpf/potential.hpp"

using namespace cpf;
using cli::Format;
using cli::Invocation;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(const Invocation& inv, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int status = cli::run(inv, in, out, err);
    return {status, out.str(), err.str()};
}

Invocation compute(const std::string& braid, const std::string& colors,
                   Format format = Format::text) {
    Invocation inv;
    inv.command = Invocation::Command::compute;
    inv.braid = braid;
    inv.colors = colors;
    inv.format = format;
    return inv;
}

}  // namespace

TEST_CASE("compute text output") {
    CHECK(run(compute("-1 -1", "1,2")).out == "∇ = 1\n");
    CHECK(run(compute("-1 -1 -2 -2", "1,2,3")).out == "∇ = -1*t2^-1 + 1*t2\n");
    CHECK(run(compute("", "1")).out == "∇ = (1) / (t1 - t1^-1)\n");
    CHECK(run(compute("-1 -1", "1,2")).status == 0);
}

TEST_CASE("the three formats denote the same polynomial") {
    const ColoredBraid chain = ColoredBraid::parse("-1 -1 -2 -2", "1,2,3");
    const Potential expected = potential_function(chain);

    const Run js = run(compute("-1 -1 -2 -2", "1,2,3", Format::json));
    const auto parsed = nlohmann::json::parse(js.out);
    CHECK(laurent_from_json(parsed.at("potential").at("value")) == expected.value);
    CHECK(parsed.at("potential").at("kind") == "polynomial");
    CHECK(parsed.at("potential").at("components") == 3);
    CHECK(parsed.at("potential").at("denominator") == "1");
    CHECK(parsed.at("braid").at("perm") == std::vector<int>{1, 2, 3});

    const Run tex = run(compute("-1 -1 -2 -2", "1,2,3", Format::latex));
    CHECK(tex.out == "\\nabla = - t_{2}^{-1} +  t_{2}\n");
}

TEST_CASE("knot json carries the symbolic denominator") {
    const Run js = run(compute("1 1 1", "1,1", Format::json));
    const auto parsed = nlohmann::json::parse(js.out);
    CHECK(parsed.at("potential").at("kind") == "knot_fraction");
    CHECK(parsed.at("potential").at("denominator") == "t1 - t1^-1");
}

TEST_CASE("axis subcommand") {
    Invocation inv = compute("", "1,1");
    inv.command = Invocation::Command::axis;
    CHECK(run(inv).out == "∇ = -1*x^-1 + 1*x\n");

    inv.format = Format::json;
    const auto parsed = nlohmann::json::parse(run(inv).out);
    CHECK(parsed.at("axis_potential").at("nvars") == 2);
}

TEST_CASE("input errors exit with status 1 and name the problem") {
    const Run bad_token = run(compute("1x", "1,1"));
    CHECK(bad_token.status == 1);
    CHECK(bad_token.err.find("'1x'") != std::string::npos);

    const Run open_braid = run(compute("1", "1,2"));
    CHECK(open_braid.status == 1);
    CHECK(open_braid.err.find("closed") != std::string::npos);

    const Run bad_colors = run(compute("1 1", "1,3"));
    CHECK(bad_colors.status == 1);

    CHECK_THROWS_AS(cli::parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("verify subcommand") {
    Invocation inv;
    inv.command = Invocation::Command::verify;
    inv.config.trials = 5;
    inv.checks = {"routes", "symmetry"};
    const Run r = run(inv);
    CHECK(r.status == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed.at("passed") == true);
    CHECK(parsed.at("checks").size() == 2);
    CHECK(parsed.at("checks").at(0).at("name") == "routes");
}

TEST_CASE("batch processes every line and reports per-line errors") {
    Invocation inv;
    inv.command = Invocation::Command::batch;
    const std::string input =
        R"({"braid":"-1 -1","colors":"1,2"})" "\n"
        R"({"braid":"1","colors":"1,2"})" "\n"
        "not json\n"
        R"({"braid":"1 1 1","colors":"1,1"})" "\n";
    const Run r = run(inv, input);
    CHECK(r.status == 1);

    std::istringstream lines(r.out);
    std::string line;
    std::vector<nlohmann::json> rows;
    while (std::getline(lines, line)) rows.push_back(nlohmann::json::parse(line));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].at("potential").at("kind") == "polynomial");
    CHECK(rows[1].contains("error"));
    CHECK(rows[2].contains("error"));
    CHECK(rows[3].at("potential").at("denominator") == "t1 - t1^-1");

    Invocation ok = inv;
    const Run clean = run(ok, R"({"braid":"-1 -1","colors":"1,2"})" "\n");
    CHECK(clean.status == 0);
}
