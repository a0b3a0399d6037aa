#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ringcode/cli.hpp"

using namespace ringcode;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name, const std::string& contents) {
    const auto dir = std::filesystem::temp_directory_path() / "ringcode_cli_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << contents;
    return path;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("weights subcommand") {
    const auto r = run({"weights", "--ring", "Z6", "--wf", "lee"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "A = 3/1"));
    CHECK(contains(r.out, "symmetric: yes"));

    const auto j = nlohmann::json::parse(run({"--format", "json", "weights", "--ring", "F2U", "--wf", "euclidean"}).out);
    CHECK(j.at("coeffs") == nlohmann::json({"0/1", "1/1", "4/1", "1/1"}));

    const auto file = scratch("wf.json", R"({"ring":"Z3","name":"tilted","coeffs":["0","1/2","2"]})");
    const auto custom = run({"weights", "--ring", "Z3", "--wf-file", file.string()});
    CHECK(custom.code == kExitOk);
    CHECK(contains(custom.out, "A = 2/1"));
    CHECK(contains(custom.out, "symmetric: no"));

    CHECK(run({"weights", "--ring", "Z6"}).code == kExitUsage);
    CHECK(run({"weights", "--ring", "Z6", "--wf", "taxicab"}).code == kExitUsage);
    CHECK(run({"weights", "--ring", "Z1", "--wf", "lee"}).code == kExitUsage);
}

TEST_CASE("gray subcommand verifies and searches") {
    const auto std_map = run({"gray", "--ring", "Z4", "--map", "standard"});
    CHECK(std_map.code == kExitOk);
    CHECK(contains(std_map.out, "isometric: true"));
    CHECK(contains(std_map.out, "bijective: true"));

    const auto found = nlohmann::json::parse(run({"--format", "json", "gray", "--ring", "Z6", "--wf", "lee", "--search", "2"}).out);
    CHECK(found.at("L") == 3);
    CHECK(found.at("flags").at("isometric") == "true");
    CHECK(found.at("flags").at("bijective") == "false");

    const auto none = run({"gray", "--ring", "Z4", "--wf", "euclidean", "--search", "2"});
    CHECK(none.code == kExitOk);
    CHECK(contains(none.out, "none exists"));
    CHECK(contains(none.out, "search space: 16"));

    CHECK(run({"gray", "--ring", "Z4"}).code == kExitUsage);
    CHECK(run({"gray", "--ring", "Z4", "--map", "fancy"}).code == kExitUsage);
}

TEST_CASE("code-info subcommand") {
    const auto f2uv = scratch("f2uv.txt", "ring: F2UV\nn: 2\nrows:\nuv uv\n");
    const auto r = run({"code-info", f2uv.string(), "--map", "standard"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "size: 2"));
    CHECK(contains(r.out, "d(lee) = 8/1"));
    CHECK_FALSE(contains(r.out, "VIOLATED"));

    const auto j = nlohmann::json::parse(run({"--format", "json", "code-info", f2uv.string(), "--map", "standard"}).out);
    const auto strong = j.at("reports").at("StrongSingleton:lee");
    CHECK(strong.at("holds") == true);
    CHECK(strong.at("tight") == true);
    CHECK(strong.at("witness").at("left") == "16");
    CHECK(strong.at("witness").at("right") == "16");

    // The Hamming gray form fails on the full code Z4^1.
    const auto full = scratch("z4_full.txt", "ring: Z4\nn: 1\nrows:\n1\n");
    const auto ham = run({"code-info", full.string(), "--wf", "hamming"});
    CHECK(ham.code == kExitViolation);
    CHECK(contains(ham.out, "VIOLATED"));

    const auto bad = scratch("bad.txt", "ring: Z4\nn: 2\nrows:\n1 7\n");
    const auto err = run({"code-info", bad.string()});
    CHECK(err.code == kExitUsage);
    CHECK(contains(err.err, "line 4"));
    CHECK(run({"code-info", "/nonexistent/file.txt"}).code == kExitUsage);
}

TEST_CASE("scan subcommand") {
    const auto r = run({"--format", "json", "scan", "--ring", "Z4", "--n", "2", "--wf", "lee", "--map", "standard"});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("codes_examined") == 15);
    CHECK(j.at("violations").empty());
    CHECK_FALSE(j.contains("runtime_seconds"));

    const auto csv = run({"--format", "csv", "scan", "--ring", "Z4", "--n", "1"});
    CHECK(csv.out.rfind("ring,n,size,generator,d:lee,", 0) == 0);

    CHECK(run({"scan", "--ring", "Z4", "--n", "1", "--wf", "hamming"}).code == kExitViolation);

    const auto file = scratch("wf4.json", R"({"ring":"Z4","name":"tilted","coeffs":["0","1","1","2"]})");
    const auto only = nlohmann::json::parse(
        run({"--format", "json", "scan", "--ring", "Z4", "--n", "1", "--wf-file", file.string()}).out);
    CHECK(only.at("weights") == nlohmann::json({"tilted"}));
    const auto both = nlohmann::json::parse(
        run({"--format", "json", "scan", "--ring", "Z4", "--n", "1", "--wf", "lee", "--wf-file", file.string()}).out);
    CHECK(both.at("weights") == nlohmann::json({"lee", "tilted"}));
    CHECK(run({"scan", "--ring", "Z4", "--n", "0"}).code == kExitUsage);
    CHECK(run({"scan", "--ring", "Z4", "--n", "4", "--budget", "100"}).code == kExitUsage);
}

TEST_CASE("RINGCODE_BUDGET sets the default scan budget") {
    setenv("RINGCODE_BUDGET", "100", 1);
    CHECK(run({"scan", "--ring", "Z4", "--n", "4"}).code == kExitUsage);
    CHECK(run({"scan", "--ring", "Z4", "--n", "1"}).code == kExitOk);
    CHECK(run({"scan", "--ring", "Z4", "--n", "2", "--budget", "1000"}).code == kExitOk);
    setenv("RINGCODE_BUDGET", "lots", 1);
    CHECK(run({"scan", "--ring", "Z4", "--n", "1"}).code == kExitUsage);
    unsetenv("RINGCODE_BUDGET");
}

TEST_CASE("global options") {
    const auto path = std::filesystem::temp_directory_path() / "ringcode_cli_tests" / "out.json";
    std::filesystem::remove(path);
    const auto r = run({"--format", "json", "--output", path.string(), "weights", "--ring", "Z4", "--wf", "lee"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    CHECK(nlohmann::json::parse(in).at("name") == "lee");

    CHECK(run({"--format", "xml", "weights", "--ring", "Z4", "--wf", "lee"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}
