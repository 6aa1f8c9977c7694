#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rvx/cli.hpp"
#include "rvx/graph.hpp"

using namespace rvx;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/rvx_cli_" + name) {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const std::vector<std::string> kSchemaKeys = {"command", "input", "params",
                                              "result", "stats", "claims"};

void check_schema(const json& doc) {
    for (const auto& key : kSchemaKeys) CHECK(doc.contains(key));
}

}  // namespace

TEST_CASE("compute on K4 via graph6") {
    auto r = run({"compute", "--g6", "C~", "--k", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    check_schema(doc);
    CHECK(doc["command"] == "compute");
    CHECK(doc["result"][0]["value"] == 0);
    CHECK(doc["result"][0]["g6"] == "C~");
}

TEST_CASE("text and json carry the same numbers") {
    auto rj = run({"compute", "--g6", "D~{", "--k", "3", "--format", "json"});
    auto rt = run({"compute", "--g6", "D~{", "--k", "3"});
    REQUIRE(rj.code == 0);
    REQUIRE(rt.code == 0);
    json doc = json::parse(rj.out);
    int value = doc["result"][0]["value"];
    CHECK(rt.out.find("rvx_3 = " + std::to_string(value)) != std::string::npos);
}

TEST_CASE("compute via family and csv") {
    auto r = run({"compute", "--family", "path:5", "--k", "3", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("g6,k,value") == 0);
    CHECK(r.out.find(",3,3") != std::string::npos);
}

TEST_CASE("compute with certificates") {
    auto r = run({"compute", "--g6", write_graph6(path(4)), "--k", "2", "--format", "json",
                  "--certificates"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"][0]["certificates"].size() == 6);  // C(4,2)
}

TEST_CASE("compute respects max-colors") {
    auto r = run({"compute", "--family", "path:6", "--k", "2", "--max-colors", "2",
                  "--format", "json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"][0]["exceeded"] == true);
    CHECK(doc["result"][0]["value"].is_null());
}

TEST_CASE("compute cache is idempotent") {
    TempFile cache("cache.tsv");
    auto first = run({"compute", "--g6", "D~{", "--k", "3", "--cache", cache.path, "--format",
                      "json"});
    REQUIRE(first.code == 0);
    json d1 = json::parse(first.out);
    CHECK(d1["stats"]["cache_hits"] == 0);

    auto second = run({"compute", "--g6", "D~{", "--k", "3", "--cache", cache.path, "--format",
                       "json"});
    REQUIRE(second.code == 0);
    json d2 = json::parse(second.out);
    CHECK(d2["stats"]["cache_hits"] == 1);
    CHECK(d2["stats"]["colorings_examined"] == 0);
    CHECK(d2["result"][0]["value"] == d1["result"][0]["value"]);
}

TEST_CASE("RVX_CACHE env supplies the default cache path") {
    TempFile cache("env_cache.tsv");
    setenv("RVX_CACHE", cache.path.c_str(), 1);
    auto first = run({"compute", "--g6", "C~", "--k", "3", "--format", "json"});
    auto second = run({"compute", "--g6", "C~", "--k", "3", "--format", "json"});
    unsetenv("RVX_CACHE");
    REQUIRE(first.code == 0);
    REQUIRE(second.code == 0);
    CHECK(json::parse(second.out)["stats"]["cache_hits"] == 1);
}

TEST_CASE("file input with multiple graphs") {
    TempFile f("graphs.g6");
    {
        std::ofstream out(f.path);
        out << "> comment line\n" << write_graph6(path(4)) << "\n" << write_graph6(cycle(5)) << "\n";
    }
    auto r = run({"compute", "--file", f.path, "--k", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc["result"].size() == 2);
    CHECK(doc["result"][0]["value"] == 1);
    CHECK(doc["result"][1]["value"] == 1);
}

TEST_CASE("sdiam subcommand") {
    auto r = run({"sdiam", "--family", "path:4", "--k", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["result"][0]["sdiam"] == 3);
}

TEST_CASE("verify subcommand") {
    auto ok = run({"verify", "--family", "star:5", "--colors", "0,0,0,0,0", "--k", "3",
                   "--format", "json"});
    REQUIRE(ok.code == 0);
    CHECK(json::parse(ok.out)["result"][0]["ok"] == true);

    auto bad = run({"verify", "--family", "path:5", "--colors", "0,1,0,1,0", "--k", "2",
                    "--format", "json"});
    REQUIRE(bad.code == 0);
    json doc = json::parse(bad.out);
    CHECK(doc["result"][0]["ok"] == false);
    CHECK(doc["result"][0]["failing_subset"] == "0,4");
}

TEST_CASE("family subcommand emits g6 and edges") {
    auto g6 = run({"family", "rose:2,3"});
    REQUIRE(g6.code == 0);
    CHECK(parse_graph6(g6.out.substr(0, g6.out.find('\n'))).order() == 5);

    auto edges = run({"family", "path:3", "--emit", "edges"});
    REQUIRE(edges.code == 0);
    CHECK(edges.out == "3\n0 1\n1 2\n");

    CHECK(run({"family", "rose:2,3", "--emit", "dot"}).code == 1);
}

TEST_CASE("sweep ng n=4") {
    auto r = run({"sweep", "ng", "--n", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    check_schema(doc);
    CHECK(doc["result"]["min_sum"] == 2);
    CHECK(doc["result"]["max_sum"] == 2);
    CHECK(doc["result"]["pairs_examined"] == 1);
}

TEST_CASE("sweep tsearch") {
    auto r = run({"sweep", "tsearch", "--n", "5", "--k", "3", "--ell", "3", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("5,3,3,4") != std::string::npos);
}

TEST_CASE("claims prop3") {
    auto r = run({"claims", "--suite", "prop3", "--n", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["confirmed"] == 21);
    CHECK(doc["result"]["refuted"] == 0);
    CHECK(doc["result"]["counterexamples_reverified"] == true);
}

TEST_CASE("claims obs1 refutations and strict mode") {
    auto lax = run({"claims", "--suite", "obs1", "--n", "5", "--format", "json"});
    REQUIRE(lax.code == 0);
    json doc = json::parse(lax.out);
    CHECK(doc["result"]["refuted"].get<int>() > 0);
    CHECK(doc["result"]["counterexamples_reverified"] == true);

    auto strict = run({"claims", "--suite", "obs1", "--n", "5", "--strict"});
    CHECK(strict.code == 2);
}

TEST_CASE("claims thm3 and example1") {
    auto r = run({"claims", "--suite", "thm3", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["result"]["refuted"] == 0);

    auto e = run({"claims", "--suite", "example1", "--n", "6", "--format", "json"});
    REQUIRE(e.code == 0);
    CHECK(json::parse(e.out)["result"]["confirmed"] == 1);
}

TEST_CASE("cache-check") {
    TempFile cache("check_cache.tsv");
    {
        std::ofstream out(cache.path);
        out << canonical_graph6(path(5)) << "\t3\t3\n";
        out << canonical_graph6(cycle(5)) << "\t3\t1\n";
    }
    auto good = run({"cache-check", "--cache", cache.path, "--fraction", "1.0", "--format",
                     "json"});
    CHECK(good.code == 0);
    CHECK(json::parse(good.out)["result"]["mismatches"] == 0);

    {
        std::ofstream out(cache.path);
        out << canonical_graph6(path(5)) << "\t3\t1\n";  // wrong value
    }
    CHECK(run({"cache-check", "--cache", cache.path, "--fraction", "1.0"}).code == 1);
}

TEST_CASE("usage and input errors exit 1") {
    CHECK(run({"compute", "--k", "3"}).code == 1);                       // no input source
    CHECK(run({"compute", "--g6", "C~"}).code == 1);                     // missing --k
    CHECK(run({"compute", "--g6", "!!", "--k", "3"}).code == 1);         // malformed graph
    CHECK(run({"compute", "--g6", "C~", "--family", "path:4", "--k", "3"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"claims", "--suite", "nope"}).code == 1);
    auto bad = run({"compute", "--g6", "!!", "--k", "3"});
    CHECK(bad.err.find("error:") == 0);
}

TEST_CASE("help exits 0") {
    CHECK(run({"--help"}).code == 0);
}
