#include "qmckay/cli.hpp"

#include <doctest.h>

using namespace qmckay::cli;

TEST_CASE("cli: cartan at r = s = 1") {
    auto r = run({"cartan", "cyclic:2", "--spec", "r=1,s=1"});
    CHECK(r.status == ok);
    CHECK(r.payload["matrix"] == nlohmann::json::parse("[[2,-2],[-2,2]]"));
    auto e8 = run({"cartan", "binary_icosahedral", "--spec", "r=4,s=1"});
    CHECK(e8.status == ok);
    CHECK(e8.payload["matrix"][0][0] == "5/2");
}

TEST_CASE("cli: wreath types") {
    auto r = run({"wreath", "types", "cyclic:2", "2"});
    CHECK(r.status == ok);
    CHECK(r.payload["count"] == 5);
}

TEST_CASE("cli: exit codes") {
    CHECK(run({}).status == usage);
    CHECK(run({"cartan"}).status == usage);
    CHECK(run({"cartan", "nonsense:4"}).status == usage);
    CHECK(run({"cartan", "cyclic:3", "--spec", "r=2"}).status == usage);
    CHECK(run({"verify", "toroidal", "--group", "cyclic:3", "--relation", "T1"}).status == usage);
    CHECK(run({"verify", "toroidal", "--group", "cyclic:3", "--orientation", "sideways"}).status == usage);
    CHECK(run({"--help"}).status == ok);
    auto fail = run({"verify", "toroidal", "--group", "cyclic:3", "--degree", "1", "--modes", "1", "--relation", "D8"});
    CHECK(fail.status == verify_failed);
    CHECK(fail.payload["relations"][0].contains("witness"));
    auto pass = run({"verify", "toroidal", "--group", "cyclic:2", "--affine", "--degree", "2", "--modes", "1"});
    CHECK(pass.status == ok);
}

TEST_CASE("cli: output is deterministic and names its anchors") {
    std::vector<std::string> args = {"verify", "heisenberg", "--group", "cyclic:3", "--degree", "2", "--modes", "2"};
    auto a = run(args), b = run(args);
    CHECK(a.render() == b.render());
    CHECK(a.payload.contains("anchor"));
    auto iso = run({"verify", "isometry", "--group", "cyclic:2", "--degree", "2", "--seed", "7"});
    CHECK(iso.status == ok);
    CHECK(iso.render() == run({"verify", "isometry", "--group", "cyclic:2", "--degree", "2", "--seed", "7"}).render());
    CHECK(iso.payload["anchor"] == "char_map_isometry");
}

TEST_CASE("cli: pretty rendering of Laurent values") {
    auto r = run({"cartan", "cyclic:3", "--pretty"});
    CHECK(r.render().find("(r s^-1)^(1/2)") != std::string::npos);
    CHECK(prettify(nlohmann::json("[1]@1 * r^(2/2) * s^(0/2)")) == "r");
    CHECK(prettify(nlohmann::json("plain text")) == "plain text");
}
