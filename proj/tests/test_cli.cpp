#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "boolgeo/cli.hpp"

using namespace boolgeo::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "boolgeo");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

const std::string example = "x1 * x2 = x2";

}  // namespace

TEST_CASE("orthogonalize") {
    const auto r = invoke({"orthogonalize", "-e", example});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out == "{\"n\":2,\"A\":[2],\"layout\":\"lsb-first\"}\n");

    const auto text = invoke({"orthogonalize", "--format", "text", "-e", example});
    CHECK(text.out.starts_with("z_(0,1) = 0\n"));

    const auto from_stdin = invoke({"orthogonalize"}, example + "\n");
    CHECK(from_stdin.out == r.out);
}

TEST_CASE("classify") {
    const auto r = invoke({"classify", "--rank", "2", "-e", example});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out ==
          "consistent: yes\n"
          "coordinate rank: 3\n"
          "irreducibility rank: 3\n"
          "rank: 2\n"
          "irreducible: no\n"
          "components: 3\n");

    const auto j = invoke({"classify", "--rank", "3", "--format", "json", "-e", example});
    CHECK(j.out.find("\"coordinate_rank\":3") != std::string::npos);
    CHECK(j.out.find("\"irreducible\":true") != std::string::npos);
    CHECK(j.out.find("\"components\":1") != std::string::npos);

    const auto bad = invoke({"classify", "-e", "x1 = 0; x1 = 1"});
    CHECK(bad.code == exit_code::inconsistent);
    CHECK(bad.out.find("irreducibility rank: 0") != std::string::npos);
}

TEST_CASE("decompose, directly and through the orthogonal JSON pipe") {
    const auto direct = invoke({"decompose", "--rank", "2", "-e", example});
    CHECK(direct.code == exit_code::ok);
    CHECK(direct.out ==
          "{\"n\":2,\"A\":[0,2],\"layout\":\"lsb-first\"}\n"
          "{\"n\":2,\"A\":[1,2],\"layout\":\"lsb-first\"}\n"
          "{\"n\":2,\"A\":[2,3],\"layout\":\"lsb-first\"}\n");

    const auto ortho = invoke({"orthogonalize", "-e", example});
    const auto piped = invoke({"decompose", "--rank", "2"}, ortho.out);
    CHECK(piped.out == direct.out);

    const auto limited = invoke({"decompose", "--rank", "2", "--limit", "1", "-e", example});
    CHECK(limited.out == "{\"n\":2,\"A\":[0,2],\"layout\":\"lsb-first\"}\n");

    const auto json = invoke({"decompose", "--rank", "2", "--format", "json", "-e", example});
    CHECK(json.out.starts_with("{\"rank\":2,\"count\":3,\"components\":["));

    CHECK(invoke({"decompose", "-e", "x1 = 0; x1 = 1"}).code == exit_code::inconsistent);
}

TEST_CASE("solve") {
    const auto r = invoke({"solve", "--rank", "1", "-e", example});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out == "x1={} x2={}\nx1={0} x2={}\nx1={0} x2={0}\n");

    CHECK(invoke({"solve", "--rank", "2", "--count", "-e", example}).out == "9\n");
    CHECK(invoke({"solve", "--rank", "64", "--count", "-e", "vars x1, x2"}).out ==
          "340282366920938463463374607431768211456\n");
    CHECK(invoke({"solve", "--rank", "2", "--limit", "2", "-e", example}).out ==
          "x1={} x2={}\nx1={1} x2={}\n");
    CHECK(invoke({"solve", "--rank", "1", "--z", "--limit", "1", "-e", example}).out ==
          "z_(0,0)={0} z_(1,0)={} z_(0,1)={} z_(1,1)={}\n");
    CHECK(invoke({"solve", "--rank", "1", "--format", "csv", "-e", "x1 = 1"}).out == "\"x1\"\n\"{0}\"\n");
    CHECK(invoke({"solve", "--rank", "2", "--format", "json", "-e", "x1 = 1"}).out == "{\"x1\":[0,1]}\n");
    CHECK(invoke({"solve", "-e", "x1 = 0; x1 = 1"}).out.empty());
}

TEST_CASE("iso") {
    const auto r = invoke({"iso", "-e", "x1 * x2 = x2", "-e", "x1 * x2 = x1"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.starts_with("isomorphic: yes\n"));
    CHECK(invoke({"iso", "-e", "x1 = x2", "-e", "x1 * x2 = x1"}).out.starts_with("isomorphic: no\n"));
    CHECK(invoke({"iso", "-e", example}).code == exit_code::bad_arguments);
    CHECK(invoke({"iso", "-e", "x1 = 1", "-e", example}).code == exit_code::bad_arguments);
}

TEST_CASE("stats") {
    CHECK(invoke({"stats", "--iso-prob", "2"}).out == "3/8 (0.375)\n");
    CHECK(invoke({"stats", "--avg-irr", "4", "2"}).out == "29/16 (1.8125)\n");
    CHECK(invoke({"stats", "--avg-ir", "4"}).out == "2 (2)\n");

    const auto ex = invoke({"stats", "--avg-irr", "4", "1", "--exhaustive"});
    CHECK(ex.out == "33/16 (2.0625)\n  exhaustive: 33/16 (matches)\n");

    const auto csv = invoke({"stats", "--csv", "--iso-prob", "10,100"});
    CHECK(csv.out.starts_with("quantity,m,r,exact,decimal,asymptotic,ratio,exhaustive,monte_carlo\n"));
    CHECK(csv.out.find("iso-prob,10,,46189/262144,") != std::string::npos);

    const auto mc1 = invoke({"stats", "--avg-irr", "8", "2", "--samples", "500", "--seed", "4", "--format", "json"});
    const auto mc2 = invoke({"stats", "--avg-irr", "8", "2", "--samples", "500", "--seed", "4", "--format", "json"});
    CHECK(mc1.code == exit_code::ok);
    CHECK(mc1.out == mc2.out);
    CHECK(mc1.out.find("\"generator\":\"mt19937_64\"") != std::string::npos);

    CHECK(invoke({"stats"}).code == exit_code::bad_arguments);
    CHECK(invoke({"stats", "--avg-irr", "3", "5"}).code == exit_code::bad_arguments);
    CHECK(invoke({"stats", "--avg-irr", "6", "2", "--exhaustive"}).code == exit_code::bad_arguments);
    CHECK(invoke({"stats", "--avg-irr", "32", "2", "--exhaustive"}).code == exit_code::limit_exceeded);
}

TEST_CASE("exit codes") {
    const auto parse = invoke({"orthogonalize", "-e", "x1 = (x2"});
    CHECK(parse.code == exit_code::parse_error);
    CHECK(parse.err.find("1:6") != std::string::npos);

    CHECK(invoke({"orthogonalize", "--max-vars", "1", "-e", example}).code == exit_code::limit_exceeded);
    CHECK(invoke({"solve", "--rank", "65", "-e", example}).code == exit_code::limit_exceeded);
    CHECK(invoke({"solve", "--rank", "0", "-e", example}).code == exit_code::bad_arguments);
    CHECK(invoke({"frobnicate"}).code == exit_code::bad_arguments);
    CHECK(invoke({"orthogonalize", "-e", "a = b", "-e", "c = d"}).code == exit_code::bad_arguments);
    CHECK(invoke({"decompose"}, "{\"n\":2,\"A\":[9]}").code == exit_code::parse_error);
}

TEST_CASE("file input and the max-vars environment override") {
    const auto path = std::filesystem::temp_directory_path() / "boolgeo_cli_test.beq";
    {
        std::ofstream f(path);
        f << "vars x1, x2, x3;\nx1 * x2 = x2\n";
    }
    const auto r = invoke({"orthogonalize", "-f", path.string()});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out == "{\"n\":3,\"A\":[2,6],\"layout\":\"lsb-first\"}\n");

    setenv(max_vars_env, "2", 1);
    CHECK(invoke({"orthogonalize", "-f", path.string()}).code == exit_code::limit_exceeded);
    // An explicit flag wins over the environment.
    CHECK(invoke({"orthogonalize", "--max-vars", "3", "-f", path.string()}).code == exit_code::ok);
    unsetenv(max_vars_env);
    std::filesystem::remove(path);
}
