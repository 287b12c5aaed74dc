#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(RRCA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("blocks command") {
    auto merged = run("blocks -p 3 -r 2 -m 1 -n 2 --kappa \"2\"");
    CHECK(merged.exit_code == 0);
    CHECK(contains(merged.out, "\"[2]\""));
    CHECK(contains(merged.out, "\"[1,1]\""));
    // one class holding both labels
    CHECK(merged.out.find("members") == merged.out.rfind("members"));

    auto split = run("blocks -p 3 -r 2 -m 1 -n 2 --kappa \"t\"");
    CHECK(split.exit_code == 0);
    CHECK(split.out.find("members") != split.out.rfind("members"));

    auto rank1 = run("blocks -p 3 -r 1 -m 2 -n 1 --c \"1\"");
    CHECK(rank1.exit_code == 0);
    CHECK(rank1.out.find("members") == rank1.out.rfind("members"));
}

TEST_CASE("smooth command exit codes") {
    CHECK(run("smooth -p 3 -r 2 -m 1 -n 2 --kappa \"1\"").exit_code == 1);
    CHECK(run("smooth -p 3 -r 2 -m 1 -n 2 --kappa \"t\"").exit_code == 0);
    CHECK(run("smooth -p 3 -r 2 -m 1 -n 2 --kappa \"2*+1\"").exit_code == 2);
    CHECK(run("smooth -p 4 -r 2 -m 1 -n 2 --kappa \"t\"").exit_code == 3);
    CHECK(run("smooth -p 3 -r 1 -m 2 -n 2 --kappa \"0\" --c \"1\" --parabolics").exit_code == 1);
}

TEST_CASE("ctx errors give exit 3") {
    // 4 does not divide 7^1 - 1 and r was forced
    CHECK(run("blocks -p 7 -r 1 -m 4 -n 1 --c \"1,1,1\"").exit_code == 3);
    // default r is derived so the same call without -r works
    CHECK(run("blocks -p 7 -m 4 -n 1 --c \"1,1,1\"").exit_code == 0);
}

TEST_CASE("g4 command") {
    auto zero = run("g4 -p 7 -r 2 --c1 \"0\" --c2 \"0\"");
    CHECK(zero.exit_code == 0);
    CHECK(contains(zero.out, "inconclusive"));
    auto generic = run("g4 -p 7 -r 4 --c1 \"t\" --c2 \"t^2+1\"");
    CHECK(generic.exit_code == 0);
    CHECK(contains(generic.out, "\"verdict\""));
    CHECK(run("g4 -p 3 -r 2 --c1 \"1\" --c2 \"1\"").exit_code == 3);
}

TEST_CASE("fake command prints TSV") {
    auto s3 = run("fake -m 1 -n 3");
    CHECK(s3.exit_code == 0);
    CHECK(contains(s3.out, "[2,1]\t2\tt + t^2"));
    auto js = run("fake -m 2 -n 1 --format json");
    CHECK(js.exit_code == 0);
    CHECK(contains(js.out, "\"fake\""));
}

TEST_CASE("classify sweep is clean at small rank") {
    auto res = run("classify --m-max 2 --n-max 2 --p 5");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "\"all_divisible\": true"));
}

TEST_CASE("oracle commands") {
    auto r1 = run("oracle rank1 -m 2 -p 3 -r 2 --c1 \"t\"");
    CHECK(r1.exit_code == 0);
    CHECK(contains(r1.out, "\"block_count\": 2"));
    CHECK(contains(r1.out, "\"dim\": 72"));

    auto s2 = run("oracle s2 -p 3 -r 2 --kappa \"t\"");
    CHECK(s2.exit_code == 0);
    CHECK(contains(s2.out, "\"block_count\": 2"));
    CHECK(contains(s2.out, "\"dim\": 648"));
}

TEST_CASE("identical invocations give identical bytes") {
    auto a = run("blocks -p 3 -r 2 -m 2 -n 2 --kappa \"t\" --c \"t+1\"");
    auto b = run("blocks -p 3 -r 2 -m 2 -n 2 --kappa \"t\" --c \"t+1\"");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto c = run("oracle rank1 -m 2 -p 3 -r 2 --c \"t\" --seed 0");
    auto d = run("oracle rank1 -m 2 -p 3 -r 2 --c \"t\" --seed 0");
    CHECK(c.out == d.out);
}
