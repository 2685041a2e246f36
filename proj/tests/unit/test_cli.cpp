#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "difflin/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "difflin");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = difflin::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(DIFFLIN_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("eval") {
    CHECK(cli({"eval", data("copy.term"), "--entry", "[a,a]", "([a],[a])"}).out == "2\n");
    CHECK(cli({"eval", data("etaeps.term"), "--entry", "a", "a"}).out == "1\n");
    CHECK(cli({"eval", data("mi.term"), "--entry", "*", "[*,*]"}).out == "1/2\n");
    CHECK(cli({"eval", data("mi.term"), "--entry", "*", "[*,*]", "--semiring", "integer"}).out == "1\n");
    Run r = cli({"eval", data("mi.term"), "--input", "*"});
    CHECK(r.code == 2);
    CHECK(r.err.find("unbounded interior") != std::string::npos);
    r = cli({"eval", data("mi.term"), "--input", "*", "--fallback-cap", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("approximate") != std::string::npos);
    r = cli({"eval", data("copy.term"), "--input", "[a]"});
    CHECK(r.out == "([],[a]): 1\n([a],[]): 1\n");
    CHECK(cli({"eval", data("digging.term"), "--size-cap", "3"}).out.find("[a,a] -> [a,a]: 1") != std::string::npos);
}

TEST_CASE("eval errors") {
    CHECK(cli({"eval", data("bad_syntax.term")}).code == 2);
    CHECK(cli({"eval", data("ill_typed.term")}).code == 2);
    CHECK(cli({"eval", data("natural_neg.term"), "--entry", "[a]", "[a]"}).code == 2);
    CHECK(cli({"eval", data("copy.term"), "--entry", "a", "a"}).code == 2);
    CHECK(cli({"eval", data("missing.term")}).code == 2);
}

TEST_CASE("equal") {
    Run r = cli({"equal", data("interchange_l.term"), data("interchange_r.term")});
    CHECK(r.code == 0);
    CHECK(r.out == "equal (graph)\n");
    r = cli({"equal", data("precoder_l.term"), data("precoder_r.term")});
    CHECK(r.code == 0);
    CHECK(r.out == "equal (model, cap 4)\n");
    r = cli({"equal", data("scaled_eta.term"), data("id.term")});
    CHECK(r.code == 1);
    CHECK(r.out == "not equal\ncounterexample: in a, out a: 2 vs 1\n");
    CHECK(cli({"equal", data("copy.term"), data("id.term")}).code == 1);
}

TEST_CASE("graph") {
    Run r = cli({"graph", data("box.term"), "--dot"});
    CHECK(r.code == 0);
    CHECK(r.out.find("digraph") != std::string::npos);
    CHECK(r.out.find("cluster_") != std::string::npos);
    CHECK(cli({"graph", data("interchange_l.term")}).out == cli({"graph", data("interchange_r.term")}).out);
    CHECK(cli({"graph", data("scaled_eta.term")}).code == 2);
}

TEST_CASE("axioms") {
    Run r = cli({"axioms", "list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("79 equations") != std::string::npos);
    r = cli({"axioms", "--tier", "deriving", "--json"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 5);
    CHECK(j[0]["id"] == "D.1");
    CHECK(j[0]["requires_negatives"] == false);
    CHECK(cli({"axioms", "--tier", "bogus"}).code == 2);
}

TEST_CASE("check") {
    Run r = cli({"check", "--semiring", "natural", "--tier", "hopf"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2 skipped") != std::string::npos);
    CHECK(r.out.find("note:") != std::string::npos);
    r = cli({"check", "--mutations"});
    CHECK(r.code == 0);
    r = cli({"check", "--mutations", "--mutation-cap", "4"});
    CHECK(r.code == 1);
    r = cli({"check", "--tier", "comonad", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["total"] == 3);
    CHECK(cli({"check", "--tier", "comonad", "--json"}).out == r.out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"check", "--semiring", "complex"}).code == 2);
    CHECK(cli({"check", "--dims", "A=0"}).code == 2);
    CHECK(cli({"check", "--dims", "A"}).code == 2);
    CHECK(cli({"check", "--basis", "weird"}).code == 2);
    CHECK(cli({"eval"}).code == 2);
    CHECK(cli({"check", "--help"}).code == 0);
}
