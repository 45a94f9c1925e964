#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

#include "support/schema_check.hpp"

// End-to-end exit-code and output contract of the installed CLI. The
// binary path arrives via TRIQUAD_CLI (set by CTest).

namespace {

using json = nlohmann::json;
using triquad::testing::SchemaRegistry;

std::string cli() {
    const char* path = std::getenv("TRIQUAD_CLI");
    REQUIRE_MESSAGE(path != nullptr, "TRIQUAD_CLI not set");
    return path;
}

const SchemaRegistry& schemas() {
    static SchemaRegistry registry = [] {
        const char* dir = std::getenv("TRIQUAD_SCHEMA_DIR");
        REQUIRE(dir != nullptr);
        return SchemaRegistry(dir);
    }();
    return registry;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::vector<std::string> lines() const {
        std::vector<std::string> ls;
        std::string cur;
        for (char c : out) {
            if (c == '\n') {
                ls.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) ls.push_back(cur);
        return ls;
    }
};

// args is a full shell command tail; stderr is discarded
RunResult run(const std::string& command) {
    const std::string full = command + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

RunResult run_cli(const std::string& args) { return run(cli() + " " + args); }

}  // namespace

TEST_CASE("check exit codes and shapes") {
    const RunResult k3 = run_cli("check Bw --property p2p3");
    CHECK(k3.exit_code == 0);
    const json line = json::parse(k3.out);
    CHECK(line["holds"] == true);
    const std::string err = schemas().validate(line, "check_line.schema.json");
    CHECK_MESSAGE(err.empty(), err);

    const RunResult srg = run_cli("check Bw --property srg");
    CHECK(srg.exit_code == 1);
    const json srg_line = json::parse(srg.out);
    CHECK(srg_line["srg"]["status"] == "degenerate-complete");
    CHECK_MESSAGE(
        schemas().validate(srg_line, "check_line.schema.json").empty(),
        "srg check line schema");

    const RunResult c5 = run_cli("check D~{ --property p2p3");  // K5 fails p2
    CHECK(c5.exit_code == 1);

    const RunResult bad = run_cli("check 'B\x01w' --property p2p3");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("gen and pipelines") {
    CHECK(run_cli("gen complete 3").out == "Bw\n");
    const RunResult pipeline =
        run(cli() + " gen bowtie | " + cli() + " check - --property p2p3");
    CHECK(pipeline.exit_code == 0);
    const RunResult rook =
        run(cli() + " gen rook 3 3 | " + cli() + " check - --property conway");
    CHECK(rook.exit_code == 0);
    CHECK(run_cli("gen paley 9").exit_code == 2);
    CHECK(run_cli("gen heptagram 7").exit_code == 2);
}

TEST_CASE("enumerate") {
    CHECK(run_cli("enumerate --n 4 --filter all").lines().size() == 11);
    const RunResult bowtie = run_cli("enumerate --n 5 --filter p2p3");
    CHECK(bowtie.lines().size() == 1);
    const RunResult pruned = run_cli("enumerate --n 5 --filter p2p3 --prune");
    CHECK(pruned.out == bowtie.out);
    CHECK(run_cli("enumerate --n 8 --filter p2p3").out.empty());
    CHECK(run_cli("enumerate --n 8 --filter p2p3 --prune").out.empty());
    CHECK(run_cli("enumerate --n 11").exit_code == 2);
    CHECK(run_cli("enumerate --n 3 --filter everything").exit_code == 2);

    // multi-line file input for check: all 4 classes on 3 vertices
    const RunResult multi = run(cli() + " enumerate --n 3 | " + cli() +
                                " check - --property p2p3");
    CHECK(multi.lines().size() == 4);
    CHECK(multi.exit_code == 1);  // a failing class forces exit 1

    // jobs flag and environment fallback leave output untouched
    const RunResult ref = run_cli("enumerate --n 6");
    CHECK(run_cli("enumerate --n 6 --jobs 4").out == ref.out);
    CHECK(run("TRIQUAD_JOBS=3 " + cli() + " enumerate --n 6").out == ref.out);
}

TEST_CASE("bounds") {
    const RunResult n9 = run_cli("bounds --n 9");
    CHECK(n9.exit_code == 1);
    CHECK(json::parse(n9.out)["inequality_holds"] == false);
    CHECK_MESSAGE(
        schemas().validate(json::parse(n9.out), "bounds_report.schema.json").empty(),
        "bounds schema");

    const RunResult n8 = run_cli("bounds --n 8");
    CHECK(n8.exit_code == 0);

    const RunResult max = run_cli("bounds --max-n");
    CHECK(max.exit_code == 0);
    CHECK(json::parse(max.out)["max_feasible_n"] == 8);
    CHECK_MESSAGE(
        schemas().validate(json::parse(max.out), "max_feasible.schema.json").empty(),
        "max-n schema");

    CHECK(run_cli("bounds").exit_code == 2);
    CHECK(run_cli("bounds --n 8 --max-n").exit_code == 2);
}

TEST_CASE("verify") {
    const RunResult t1 = run_cli("verify --theorem 1");
    CHECK(t1.exit_code == 0);
    const json t1_json = json::parse(t1.out);
    CHECK(t1_json["verified"] == true);
    CHECK(t1_json["hits"].size() == 2);
    CHECK(t1_json["hits"][0] == "Bw");
    CHECK_MESSAGE(
        schemas().validate(t1_json, "verify_result.schema.json").empty(),
        "verify schema");

    const RunResult t2 = run_cli("verify --theorem 2");
    CHECK(t2.exit_code == 0);
    CHECK(json::parse(t2.out)["max_n"] == 8);

    CHECK(run_cli("verify --theorem 3").exit_code == 2);
}

TEST_CASE("verify emits hit certificates on request") {
    const std::string path = "/tmp/triquad-test-certs.json";
    const RunResult t1 =
        run_cli("verify --theorem 1 --certificates " + path);
    CHECK(t1.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    json certs;
    in >> certs;
    REQUIRE(certs.is_array());
    REQUIRE(certs.size() == 2);
    CHECK(certs[0]["canon_g6"] == "Bw");
    CHECK(certs[0]["p2_report"]["holds"] == true);
    CHECK_MESSAGE(
        schemas().validate(certs, "certificate_list.schema.json").empty(),
        "certificate list schema");
    std::remove(path.c_str());
}

TEST_CASE("convert") {
    const RunResult adj = run_cli("convert Bw --to adjlist-json");
    CHECK(adj.exit_code == 0);
    CHECK_MESSAGE(
        schemas().validate(json::parse(adj.out), "adjlist.schema.json").empty(),
        "adjlist schema");
    const RunResult back = run(cli() + " convert Bw --to adjlist-json | " + cli() +
                               " convert - --from adjlist-json --to g6");
    CHECK(back.out == "Bw\n");
    CHECK(run_cli("convert '{\"n\":1}' --from adjlist-json --to g6").exit_code == 2);
}

TEST_CASE("file path input") {
    const std::string path = "/tmp/triquad-test-input.g6";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("Bw\nDK{\n", f);
        fclose(f);
    }
    const RunResult both = run_cli("check " + path + " --property p2p3");
    CHECK(both.exit_code == 0);
    REQUIRE(both.lines().size() == 2);
    CHECK(json::parse(both.lines()[0])["graph6"] == "Bw");
    CHECK(json::parse(both.lines()[1])["holds"] == true);
    std::remove(path.c_str());
}

TEST_CASE("hidden oracle subcommand") {
    CHECK(run_cli("oracle triangles Bw 0 1").out == "1\n");
    CHECK(run_cli("oracle classes 4").out == "11\n");
    const RunResult iso = run(cli() + " oracle iso Bw Bw");
    CHECK(iso.exit_code == 0);
    CHECK(iso.out == "true\n");
    // the subcommand stays out of the help text
    const RunResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("oracle") == std::string::npos);
}
