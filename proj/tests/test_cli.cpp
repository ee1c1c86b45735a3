#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

// stdout and stderr are merged
Run run(const std::string& args)
{
    const char* bin = std::getenv("QSP_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "QSP_CLI not set");
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
    int st = pclose(f);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("list")
{
    Run r = run("list");
    CHECK(r.code == 0);
    for (const char* s : {"hecke-relations", "braid-td", "module-relations", "commute", "coideal-serre",
                          "schur-xlm", "schur-psi", "schur-generate", "variants", "specialize-consistency"})
        CHECK(r.out.find(s) != std::string::npos);
}

TEST_CASE("eval")
{
    Run r = run("eval --kind hecke --expr 'T[s0]*T[s0]'");
    CHECK(r.code == 0);
    CHECK(r.out == "(-q1 + q0^-1)*T[s0] + q0^-1*q1*T[]\n");

    r = run("eval --kind scalar --expr '(q^2 - 1)/(q - 1)'");
    CHECK(r.code == 0);
    CHECK(r.out == "q + 1\n");

    r = run("eval --kind hecke --expr 'T[s0] + + T[s1]'");
    CHECK(r.code == 2);
    CHECK(r.out.find("position 8") != std::string::npos);
}

TEST_CASE("verify exit codes")
{
    Run r = run("verify --suite hecke-relations --d 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("pass") != std::string::npos);

    // the displayed e_r coefficient is refuted, so this suite fails
    r = run("verify --suite schur-psi --r 2 --d 1");
    CHECK(r.code == 1);
    CHECK(r.out.find("Psi(e_r) displayed") != std::string::npos);

    r = run("verify --suite commute --r 1 --d 2");
    CHECK(r.code == 2);
    CHECK(r.out.find("precondition violated") != std::string::npos);
    CHECK(r.out.find("r >= d") != std::string::npos);

    r = run("verify --suite no-such-suite");
    CHECK(r.code == 2);

    r = run("verify --suite variants --r 2 --d 1");
    CHECK(r.code == 2);
}

TEST_CASE("json report")
{
    Run r = run("verify --suite braid-td --d 3 --format json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["suite"] == "braid-td");
    CHECK(j["passed"] == true);
    CHECK(j["failures"] == 0);
    CHECK(j["config"]["d"] == 3);
    REQUIRE(j["checks"].is_array());
    CHECK(!j["checks"].empty());
    for (auto& c : j["checks"]) {
        CHECK(c["status"] == "pass");
        CHECK(c.contains("anchor"));
        CHECK(c.contains("seconds"));
    }
}

TEST_CASE("cache dir and output file")
{
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "qsp_cli_test_cache";
    fs::remove_all(dir);
    fs::path out = dir / "report.md";
    Run r = run("verify --suite hecke-relations --d 2 --cache-dir " + dir.string() + " --output " + out.string());
    CHECK(r.code == 0);
    CHECK(fs::exists(out));
    bool cached = false;
    for (auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") cached = true;
    CHECK(cached);

    // second run loads from the cache
    r = run("verify --suite hecke-relations --d 2 --cache-dir " + dir.string());
    CHECK(r.code == 0);
    fs::remove_all(dir);
}

TEST_CASE("certificate")
{
    Run r = run("certificate --r 2 --d 1 --cert-len 3");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["entries"].size() == 70);
    for (auto& e : j["entries"]) CHECK(e["verified"] == true);
}
