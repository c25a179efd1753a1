#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#ifndef G2COH_CLI_PATH
#error "G2COH_CLI_PATH must point at the g2coh binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
    const std::string command = std::string(G2COH_CLI_PATH) + " " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) result.output += buffer.data();
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_path(const std::string& stem) {
    return "/tmp/g2coh_test_" + std::to_string(getpid()) + "_" + stem;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int line_count(const std::string& text) {
    int lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("table subcommand") {
    SUBCASE("boundary table as json") {
        const RunResult r = run("table --m1 0 --m2 2 --what boundary --format json");
        REQUIRE(r.exit_code == 0);
        const auto doc = nlohmann::json::parse(r.output);
        CHECK(doc["case"] == 2);
        const auto q3 = doc["boundary"]["3"];
        REQUIRE(q3.size() == 2);
        CHECK(q3[0] == nlohmann::json({{"type", "cusp"}, {"k", 12}}));
        CHECK(q3[1] == nlohmann::json({{"type", "cusp"}, {"k", 8}}));
        CHECK_FALSE(doc.contains("eisenstein"));
    }

    SUBCASE("vanishing case") {
        const RunResult r = run("table --m1 1 --m2 1");
        REQUIRE(r.exit_code == 0);
        const auto doc = nlohmann::json::parse(r.output);
        CHECK(doc["case"] == 9);
        for (int q = 0; q < 8; ++q) {
            CHECK(doc["boundary"][std::to_string(q)].empty());
            CHECK(doc["eisenstein"][std::to_string(q)].empty());
            CHECK(doc["dims"]["boundary"][std::to_string(q)] == 0);
        }
    }

    SUBCASE("negative input is a usage error") {
        CHECK(run("table --m1 -1 --m2 0").exit_code == 2);
        CHECK(run("table --m1 0 --m2 -3").exit_code == 2);
    }

    SUBCASE("unknown flags and bad enum values") {
        CHECK(run("table --m1 0 --m2 0 --bogus").exit_code == 2);
        CHECK(run("table --m1 0 --m2 0 --format yaml").exit_code == 2);
        CHECK(run("table --m1 0 --m2 0 --what everything").exit_code == 2);
        CHECK(run("frobnicate").exit_code == 2);
        CHECK(run("").exit_code == 2);
    }

    SUBCASE("markdown and latex formats") {
        const RunResult md = run("table --m1 2 --m2 2 --format markdown");
        CHECK(md.exit_code == 0);
        CHECK(md.output.find("| q |") != std::string::npos);
        const RunResult tex = run("table --m1 2 --m2 2 --format latex");
        CHECK(tex.exit_code == 0);
        CHECK(tex.output.find("\\begin{tabular}") != std::string::npos);
    }

    SUBCASE("help exits cleanly") { CHECK(run("--help").exit_code == 0); }
}

TEST_CASE("l-oracle plumbing") {
    SUBCASE("named modes") {
        const RunResult r = run("table --m1 0 --m2 2 --l-oracle all-zero");
        REQUIRE(r.exit_code == 0);
        const auto doc = nlohmann::json::parse(r.output);
        CHECK(doc["oracle"] == "all-zero");
        CHECK(doc["dims"]["eisenstein"]["3"] == 0);
        CHECK(doc["dims"]["eisenstein"]["4"] == 1);
        CHECK(run("table --m1 0 --m2 0 --l-oracle nonsense").exit_code == 2);
    }

    SUBCASE("environment default") {
        const std::string command = std::string("G2COH_L_ORACLE=sign ") + G2COH_CLI_PATH +
                                    " table --m1 0 --m2 0 2>&1";
        FILE* pipe = popen(command.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string output;
        std::array<char, 4096> buffer;
        while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr)
            output += buffer.data();
        REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
        CHECK(nlohmann::json::parse(output)["oracle"] == "sign");
    }

    SUBCASE("explicit oracle file") {
        const std::string good = temp_path("oracle_good.json");
        {
            std::ofstream out(good);
            out << R"({"std": {"12": {"zero": 0, "nonzero": 1}}})";
        }
        const RunResult ok = run("table --m1 3 --m2 0 --l-oracle file:" + good);
        REQUIRE(ok.exit_code == 0);
        const auto doc = nlohmann::json::parse(ok.output);
        CHECK(doc["dims"]["eisenstein"]["3"] == 1);
        CHECK(doc["dims"]["eisenstein"]["4"] == 0);

        // Missing required entry: named in the error.
        const std::string empty = temp_path("oracle_empty.json");
        {
            std::ofstream out(empty);
            out << "{}";
        }
        const RunResult missing = run("table --m1 3 --m2 0 --l-oracle file:" + empty);
        CHECK(missing.exit_code == 2);
        CHECK(missing.output.find("std/12") != std::string::npos);

        // Inconsistent sizes: named in the error.
        const std::string bad = temp_path("oracle_bad.json");
        {
            std::ofstream out(bad);
            out << R"({"std": {"12": {"zero": 5, "nonzero": 1}}})";
        }
        const RunResult invalid = run("table --m1 3 --m2 0 --l-oracle file:" + bad);
        CHECK(invalid.exit_code == 2);
        CHECK(invalid.output.find("std/12") != std::string::npos);

        CHECK(run("table --m1 0 --m2 0 --l-oracle file:/no/such/file.json").exit_code == 2);

        std::remove(good.c_str());
        std::remove(empty.c_str());
        std::remove(bad.c_str());
    }
}

TEST_CASE("sweep subcommand") {
    const std::string out = temp_path("sweep.jsonl");

    SUBCASE("grid size and determinism") {
        REQUIRE(run("sweep --m1-max 3 --m2-max 3 --out " + out).exit_code == 0);
        const std::string first = slurp(out);
        CHECK(line_count(first) == 16);

        REQUIRE(run("sweep --m1-max 3 --m2-max 3 --out " + out).exit_code == 0);
        CHECK(slurp(out) == first);

        // Lexicographic order over lambda.
        std::istringstream lines(first);
        std::string line;
        std::int64_t previous = -1;
        while (std::getline(lines, line)) {
            const auto doc = nlohmann::json::parse(line);
            const std::int64_t key =
                doc["lambda"]["m1"].get<std::int64_t>() * 100 +
                doc["lambda"]["m2"].get<std::int64_t>();
            CHECK(key > previous);
            previous = key;
        }
        std::remove(out.c_str());
    }

    SUBCASE("single point") {
        REQUIRE(run("sweep --m1-max 0 --m2-max 0 --out " + out).exit_code == 0);
        const std::string text = slurp(out);
        CHECK(line_count(text) == 1);
        CHECK(nlohmann::json::parse(text)["case"] == 1);
        std::remove(out.c_str());
    }

    SUBCASE("unwritable path") {
        CHECK(run("sweep --m1-max 1 --m2-max 1 --out /no/such/dir/out.jsonl").exit_code == 2);
        CHECK(run("sweep --m1-max -1 --m2-max 0 --out " + out).exit_code == 2);
    }
}

TEST_CASE("verify subcommand") {
    const RunResult ok = run("verify --grid 3");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("[PASS]") != std::string::npos);
    CHECK(ok.output.find("[FAIL]") == std::string::npos);

    const RunResult js = run("verify --grid 2 --format json");
    CHECK(js.exit_code == 0);
    CHECK(nlohmann::json::parse(js.output)["all_passed"] == true);

    CHECK(run("verify --grid 0").exit_code == 2);
    CHECK(run("verify").exit_code == 2);
}
