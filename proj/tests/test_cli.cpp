#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "momentforge");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    int code = momentforge::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classical moments") {
    CHECK(run({"classical", "--family", "C", "--rank", "3", "--k", "6"}).out == "9449\n");
    CHECK(run({"classical", "--group", "GL8", "--k", "4"}).out == "24\n");
    Result r = run({"classical", "--type", "A", "--rank", "1", "--kmax", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 1\n2 2\n3 5\n4 14\n5 42\n6 132\n");
    Result j = run({"--format", "json", "classical", "--group", "Sp6", "--k", "4"});
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["moments"][0]["value"] == "104");
    CHECK(run({"--format", "csv", "classical", "--group", "Sp6", "--k", "5"}).out == "k,moment\n5,909\n");
}

TEST_CASE("weyl-dim and tensor") {
    CHECK(run({"weyl-dim", "--type", "A", "--rank", "3", "--weight", "2,0,0,-2"}).out == "84\n");
    CHECK(run({"weyl-dim", "--group", "C3", "--weight", "1,0,0"}).out == "6\n");
    Result t = run({"tensor", "--group", "C3", "--lambda", "1,0,0", "--mu", "1,0,0"});
    CHECK(t.code == 0);
    CHECK(t.out == "(0,0,0): 1\n(1,1,0): 1\n(2,0,0): 1\n");
    Result p = run({"--format", "json", "tensor", "--group", "A1", "--power", "2"});
    auto j = nlohmann::json::parse(p.out);
    CHECK(j.size() == 2);
}

TEST_CASE("extraspecial") {
    CHECK(run({"extraspecial", "--p", "2", "--a", "4", "--case", "O+", "--k", "4"}).out == "135\n");
    CHECK(run({"extraspecial", "--p", "2", "--a", "3", "--acting", "Sp", "--k", "3"}).out == "6\n");
    Result cmp = run({"extraspecial", "--p", "2", "--a", "4", "--case", "O", "--k", "4", "--reference"});
    CHECK(cmp.code == 0);
    CHECK(cmp.out.find("difference 30") != std::string::npos);
    CHECK(cmp.out.find("reference_difference 20") != std::string::npos);
    CHECK(cmp.out.find("reference_mismatch true") != std::string::npos);
    CHECK(cmp.err.find("disagrees") != std::string::npos);
    Result js = run({"--format", "json", "extraspecial", "--p", "2", "--a", "3", "--acting", "Sp", "--k", "4"});
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["orbit_count"] == "30");
    CHECK(j["total"] == "262144");
    Result tr = run({"extraspecial", "--p", "2", "--a", "3", "--acting", "O+", "--transitivity"});
    CHECK(tr.out.find("35 isotropic") != std::string::npos);
    CHECK(tr.out.find("28 non-isotropic") != std::string::npos);
}

TEST_CASE("Weil characters and indicators") {
    CHECK(run({"fs", "--group", "sp:2:5", "--part", "odd"}).out == "-1\n");
    CHECK(run({"fs", "--group", "sp:2:5", "--rep", "weil-even"}).out == "1\n");
    CHECK(run({"fs", "--file", "generated/SL2_5.tbl", "--char", "weil_odd"}).out == "-1\n");
    Result w = run({"--format", "json", "weil", "--group", "gu:3:2", "--constituent", "1"});
    REQUIRE(w.code == 0);
    auto j = nlohmann::json::parse(w.out);
    CHECK(j["degree"] == "3");
    CHECK(j["fs"] == 0);
    CHECK(j["m2"] == "1");
    CHECK(run({"weil", "--group", "sp:4:3", "--part", "even"}).out.find("degree 5") != std::string::npos);
}

TEST_CASE("group moments, drop and reports") {
    CHECK(run({"group-moment", "--group", "2i", "--rep", "natural", "--k", "6"}).out == "133\n");
    CHECK(run({"group-moment", "--group", "sp:4:3", "--part", "odd", "--source", "formula", "--k", "3"}).out == "6\n");
    Result rep = run({"group-moment", "--group", "sp:2:5", "--part", "odd", "--ambient", "A1"});
    CHECK(rep.out.find("largest_equal_k 5") != std::string::npos);
    CHECK(run({"drop", "--group", "2i", "--rep", "natural", "--crosscheck"}).out == "1/2\n");
    Result r = run({"--format", "json", "report", "--row", "SL2(5)"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j[0]["largest_equal_k"] == 5);
    CHECK(j[0]["rows"][5]["mg"] == "133");
}

TEST_CASE("output does not depend on the thread count") {
    std::vector<std::string> base{"group-moment", "--group", "sp:4:3", "--part", "even", "--source", "formula", "--kmax", "6"};
    Result one = run(base);
    auto with_threads = base;
    with_threads.insert(with_threads.begin(), {"--threads", "3"});
    Result three = run(with_threads);
    CHECK(one.code == 0);
    CHECK(one.out == three.out);
    CHECK(run(base).out == one.out);
}

TEST_CASE("exit codes") {
    CHECK(run({"classical", "--bogus"}).code == 2);
    CHECK(run({"classical", "--group", "D2", "--k", "2"}).code == 2);
    CHECK(run({"classical", "--group", "C3", "--k", "9"}).code == 3);
    CHECK(run({"weyl-dim", "--group", "A3", "--weight", "0,1,0,0"}).code == 2);
    CHECK(run({"group-moment", "--group", "sp:4:3", "--part", "odd", "--k", "2", "--order-cap", "100"}).code == 3);
    CHECK(run({"extraspecial", "--p", "3", "--a", "2", "--case", "O", "--k", "3"}).code == 2);
    CHECK(run({"table-moment", "--file", "nowhere.tbl", "--char", "x", "--k", "1"}).code == 2);
    CHECK(run({"report", "--row", "nothing"}).code == 2);
    CHECK(run({}).code == 2);
    Result help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("extraspecial") != std::string::npos);
}

}  // TEST_SUITE

TEST_SUITE("external") {

TEST_CASE("table-moment on the 2J2 table") {
    CHECK(run({"table-moment", "--file", "external/2J2.tbl", "--char", "chi6a", "--k", "6"}).out == "10660\n");
    Result r = run({"report", "--row", "2J2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("largest_equal_k 5") != std::string::npos);
}

}  // TEST_SUITE
