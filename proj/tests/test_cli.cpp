#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(EXGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string data_file(const std::string& name) {
    return std::string(EXGRAPH_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("golden outputs match byte for byte") {
    const RunResult trees = run_cli("trees " + data_file("k4.txt") + " --method matrix");
    CHECK(trees.exit_code == 0);
    CHECK(trees.output == "16\n");

    const RunResult egf = run_cli("egf all_matchings 5");
    CHECK(egf.exit_code == 0);
    CHECK(egf.output == "1 2 4 10 26\n");

    const RunResult heawood = run_cli("heawood 1");
    CHECK(heawood.exit_code == 0);
    CHECK(heawood.output == "7\n");
}

TEST_CASE("outputs are byte-identical across repeated runs") {
    const std::string invocations[] = {
        "trees " + data_file("k4.txt") + " --method dpc",
        "chromatic " + data_file("k4.txt"),
        "matchpoly " + data_file("k4.txt"),
        "treepoly " + data_file("k4.txt"),
        "gnp 25 1/2 12345",
        "ramsey cointail 10",
        "puzzle wgc",
    };
    for (const std::string& args : invocations) {
        const RunResult first = run_cli(args);
        const RunResult second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);
        CHECK_FALSE(first.output.empty());
    }
}

TEST_CASE("exit codes: 0 success, 1 domain error, 2 usage error") {
    CHECK(run_cli("heawood 2").exit_code == 0);
    // Domain errors: nonexistent file, negative genus.
    CHECK(run_cli("trees /nonexistent/graph.txt").exit_code == 1);
    CHECK(run_cli("heawood -- -1").exit_code == 1);
    // Usage errors: unknown subcommand, unknown flag, missing arguments.
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("trees").exit_code == 2);
    CHECK(run_cli("heawood 1 --bogus").exit_code == 2);
}

TEST_CASE("selected subcommands produce the expected text") {
    const RunResult faces = run_cli("faces " + data_file("k7.txt") + " --rot " +
                                    data_file("k7.rot"));
    CHECK(faces.exit_code == 0);
    CHECK(faces.output.find("faces: 14") != std::string::npos);
    CHECK(faces.output.find("genus: 1") != std::string::npos);

    const RunResult mst = run_cli("mst " + data_file("k4.txt"));
    CHECK(mst.exit_code == 0);
    CHECK(mst.output.find("weight: 3") != std::string::npos);

    const RunResult wgc = run_cli("puzzle wgc");
    CHECK(wgc.output.find("states: 10") != std::string::npos);
    CHECK(wgc.output.find("shortest: 7") != std::string::npos);
    CHECK(wgc.output.find("solutions: 2") != std::string::npos);

    const RunResult mc = run_cli("puzzle mc 4 4 2");
    CHECK(mc.output.find("goal: unreachable") != std::string::npos);

    const RunResult adj = run_cli("rado adj 1 2");
    CHECK(adj.output == "true\n");
    const RunResult wit = run_cli("rado witness --v 1,3 --w 0,2");
    CHECK(wit.output == "26\n");

    const RunResult json_run = run_cli("--json heawood 1");
    CHECK(json_run.exit_code == 0);
    CHECK(json_run.output == "{\"bound\":7}\n");

    const RunResult tor = run_cli("torcheck " + data_file("k7.txt"));
    CHECK(tor.output.find("verdict: possibly toroidal") != std::string::npos);
}
