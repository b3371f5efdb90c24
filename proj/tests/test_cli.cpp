#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
    int status;
    std::string out;
};

CliRun run(const std::string& args) {
    std::string cmd = std::string("'") + LONELY_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(CliGapTest, Examples) {
    CliRun r = run("gap 1 2 3 4 5");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(first_line(r.out), "15/94");
    EXPECT_NE(r.out.find("reciprocal 6.26666666666667"), std::string::npos);
    EXPECT_EQ(first_line(run("gap 1 2").out), "1/3");
    EXPECT_EQ(first_line(run("gap --unshifted 1 2 3").out), "1/4");
}

TEST(CliGapTest, WitnessAndBracket) {
    CliRun r = run("gap --witness 1 2 3");
    EXPECT_NE(r.out.find("witness "), std::string::npos);
    CliRun b = run("gap --max-denominator 10 1 2 3 4 5");
    EXPECT_EQ(b.status, 0);
    EXPECT_EQ(b.out.rfind("between ", 0), 0u);
}

TEST(CliGapTest, ParseErrorsExitTwo) {
    EXPECT_EQ(run("gap 1 x").status, 2);
    EXPECT_EQ(run("gap 0 1").status, 2);
    EXPECT_EQ(run("gap").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("gap --max-denominator 1 1 2").status, 2);
}

TEST(CliVerifyTest, KnownTriples) {
    EXPECT_EQ(run("verify 1,2,3,4,5 0,46/94,38/94,47/94,72/94 15/94").status, 0);
    EXPECT_EQ(run("verify 2,3,4,5,6,8 0,29/30,17/30,0,16/30,22/30 2/15").status, 0);
    EXPECT_EQ(run("verify 1,2,3,4,5 0,46/94,38/94,47/94,72/94 7003/47000").status, 1);  // 15/94 - 1/1000
    EXPECT_EQ(run("verify 2,3,4,5,6,8 0,29/30,17/30,0,16/30,22/30 1997/15000").status, 1);
}

TEST(CliVerifyTest, ParseErrorsExitTwo) {
    EXPECT_EQ(run("verify 1,2 0,1/0 1/3").status, 2);
    EXPECT_EQ(run("verify 1,2 0 1/3").status, 2);
    EXPECT_EQ(run("verify 1,2 0,1/2 abc").status, 2);
}

TEST(CliVerifyTest, PrintsTheIntervals) {
    CliRun r = run("verify 1 0 1/2");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("runner 1 (v=1):"), std::string::npos);
    EXPECT_NE(r.out.find("covered"), std::string::npos);
}

TEST(CliSweepTest, FilesAreDeterministic) {
    auto dir = std::filesystem::temp_directory_path() / "lonely_cli_test";
    std::filesystem::create_directories(dir);
    auto a = dir / "a.csv", b = dir / "b.csv", j = dir / "c.json";
    ASSERT_EQ(run("sweep --n 3 --max-sum 12 --jobs 1 --quiet --output '" + a.string() + "'").status, 0);
    ASSERT_EQ(run("sweep --n 3 --max-sum 12 --jobs 2 --quiet --output '" + b.string() + "'").status, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_NE(slurp(a).find("# total="), std::string::npos);
    ASSERT_EQ(run("sweep --n 3 --max-sum 12 --quiet --format json --output '" + j.string() + "'").status, 0);
    EXPECT_NE(slurp(j).find("\"footer\""), std::string::npos);
    EXPECT_EQ(run("sweep --n 3 --max-sum 12 --quiet --format xml").status, 2);
    std::filesystem::remove_all(dir);
}

TEST(CliSweepTest, PairsToStdout) {
    CliRun r = run("sweep --n 2 --max-sum 5 --quiet");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("2,1 2,1/3,"), std::string::npos);
    EXPECT_NE(r.out.find("# total=4 below_bound=0 at_bound=1 above_bound=3 unresolved=0"), std::string::npos);
}

TEST(CliTableTest, SmallTable) {
    CliRun r = run("table --max-n 4");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("2 1/3 3\n"), std::string::npos);
    EXPECT_NE(r.out.find("3 1/4 4\n"), std::string::npos);
    EXPECT_NE(r.out.find("4 1/5 5\n"), std::string::npos);
    EXPECT_EQ(run("table --max-n 40").status, 2);
}

TEST(CliZonolabTest, Examples) {
    EXPECT_EQ(first_line(run("zonolab lvp --rectangle 3 5").out), "false");
    EXPECT_EQ(first_line(run("zonolab kappa --cusick 5").out), "\"3/5\"");
    EXPECT_EQ(first_line(run("zonolab count 1 2 3").out), "10");
    EXPECT_EQ(first_line(run("zonolab kappa --lr 1 2 3").out), "\"1/2\"");
    std::string w = run("zonolab width --cusick 7").out;
    EXPECT_NE(w.find(R"("kind":"Exactly")"), std::string::npos);
    EXPECT_NE(w.find(R"("value":3)"), std::string::npos);
}

TEST(CliZonolabTest, ConfigurationInput) {
    CliRun r = run(R"(zonolab gale '{"dim":2,"vectors":[[1,0],[0,1],[-1,-1]]}')");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("\"dim\":1"), std::string::npos);
    CliRun c = run(R"(zonolab cosimple '{"dim":2,"vectors":[[1,2],[2,1],[1,-2],[-2,1]]}')");
    EXPECT_EQ(first_line(c.out), R"({"coloopless":true,"cosimple":true})");
}

TEST(CliZonolabTest, InvalidInputExitsTwo) {
    EXPECT_EQ(run("zonolab cusick 2").status, 2);
    EXPECT_EQ(run("zonolab almost-coloopless 4").status, 2);
    EXPECT_EQ(run("zonolab gale '{not json'").status, 2);
    EXPECT_EQ(run(R"(zonolab gale '{"dim":2,"vectors":[[1,1],[2,2]]}')").status, 2);
    EXPECT_EQ(run("zonolab teleport").status, 2);
}
