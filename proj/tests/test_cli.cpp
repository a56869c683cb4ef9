#include "cli_runner.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <vector>

using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

void check_schema(const json& j) {
    REQUIRE(j.is_object());
    CHECK(j.at("algebra").is_string());
    CHECK(j.at("degree").is_number_integer());
    CHECK(j.at("count").is_number_integer());
    REQUIRE(j.at("terms").is_array());
    CHECK(j.at("terms").size() == j.at("count").get<std::size_t>());
    for (const auto& t : j.at("terms")) {
        CHECK(t.at("coeff").is_string());
        CHECK(t.at("term").is_string());
    }
}

} // namespace

TEST_CASE("basis") {
    auto r = run_cli("basis --algebra nov --gens 1 --degree 3");
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"x1 o (x1 o x1)", "(x1 o x1) o x1", "2"});

    r = run_cli("basis --algebra sgd --gens 2 --degree 2 --multilinear");
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 4);
    CHECK(lines(r.out).back() == "3");

    r = run_cli("basis --algebra sgd --gens 3 --degree 3 --multilinear --count-only");
    CHECK(r.code == 0);
    CHECK(r.out == "17\n");
}

TEST_CASE("text and JSON carry the same basis") {
    auto text = run_cli("basis --algebra sgd --gens 2 --degree 3");
    auto js = run_cli("basis --algebra sgd --gens 2 --degree 3 --json");
    REQUIRE(js.code == 0);
    const json j = json::parse(js.out);
    check_schema(j);
    CHECK(j["algebra"] == "sgd");
    CHECK(j["degree"] == 3);
    auto tl = lines(text.out);
    REQUIRE(tl.size() == j["terms"].size() + 1);
    for (std::size_t i = 0; i < j["terms"].size(); ++i) {
        CHECK(j["terms"][i]["term"] == tl[i]);
        CHECK(j["terms"][i]["coeff"] == "1");
    }
    CHECK(std::to_string(j["count"].get<int>()) == tl.back());
}

TEST_CASE("multiply, reduce, expand") {
    auto r = run_cli("multiply --op bracket '(x1)' '(x2 o x3)'");
    CHECK(r.code == 0);
    CHECK(r.out == "-[x2 o x3, x1]\n");

    r = run_cli("multiply --op bracket '(x1)' '(x2 o x3)' --json");
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    check_schema(j);
    CHECK(j["terms"][0]["coeff"] == "-1");
    CHECK(j["terms"][0]["term"] == "[x2 o x3, x1]");
    CHECK(j["degree"] == 3);

    r = run_cli("multiply --algebra nov 'x1 o x2' x3");
    CHECK(r.out == "(x1 o x3) o x2\n");

    r = run_cli("reduce --algebra nov \"x1*x2*x3''\"");
    CHECK(r.code == 0);
    CHECK(r.out == "x2 o (x1 o x3) - (x2 o x3) o x1\n");

    r = run_cli("reduce \"x2*x1'\"");
    CHECK(r.out == "x2 o x1\n");

    r = run_cli("expand --algebra nov 'x1 o (x2 o x3)'");
    CHECK(r.out == "x1*x2*x3'' + x1*x2'*x3'\n");

    r = run_cli("expand '[x1, x2]'");
    CHECK(r.out == "-{x2, x1}\n");
}

TEST_CASE("check and dims") {
    auto r = run_cli("check --identity 7");
    CHECK(r.code == 0);
    CHECK(r.out.find("holds") != std::string::npos);

    r = run_cli("check");
    CHECK(r.code == 0);
    CHECK(r.out.find("fails") == std::string::npos);

    r = run_cli("check --json");
    const json j = json::parse(r.out);
    REQUIRE(j.size() == 9);
    for (const auto& rep : j) CHECK(rep["holds"] == true);

    r = run_cli("dims --algebra nov --gens 1 --max-degree 7");
    CHECK(r.code == 0);
    CHECK(lines(r.out).back() == "1,1,2,3,5,7,11");

    r = run_cli("dims --algebra sgd --multilinear --max-degree 3");
    CHECK(lines(r.out).back() == "1,3,17");
}

TEST_CASE("exit codes") {
    auto r = run_cli("multiply --op bracket '(x1' x2", true);
    CHECK(r.code == 2);
    CHECK(r.out.find("(x1\n   ^") != std::string::npos);

    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("basis --algebra lie").code == 2);
    CHECK(run_cli("basis --degree 0").code == 2);
    CHECK(run_cli("check --identity 11").code == 2);
    CHECK(run_cli("multiply --algebra nov --op bracket x1 x2").code == 2);
    CHECK(run_cli("reduce \"x1*x2''\"").code == 3);
    CHECK(run_cli("expand --algebra nov '[x1, x2]'").code == 3);
    CHECK(run_cli("reduce \"{x2', x1}\"").code == 3);
    CHECK(run_cli("basis --help").code == 0);
}
