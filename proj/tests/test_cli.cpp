#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "operad/cli.hpp"

using namespace operad;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "operad");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
    std::string t = text;
    while (!t.empty() && t.back() == '\n') t.pop_back();
    return t.substr(t.rfind('\n') + 1);
}

class CliWorkspace : public ::testing::Test {
protected:
    void SetUp() override {
        path_ = std::filesystem::temp_directory_path() /
                ("operad_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()) + ".ws");
        std::filesystem::copy_file(std::string(OPERAD_TEST_DIR) + "/data/demo.ws", path_,
                                   std::filesystem::copy_options::overwrite_existing);
    }
    void TearDown() override { std::filesystem::remove(path_); }
    std::string ws() const { return path_.string(); }

    std::filesystem::path path_;
};

}  // namespace

TEST(CliSplice, Examples) {
    Outcome r = run({"splice", "[N,N,N]", "1", "[B,B]"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "[N,B,B,N]\n");
    EXPECT_EQ(run({"splice", "[N]", "0", "[B]"}).out, "[B]\n");
    Outcome bad = run({"splice", "[N]", "3", "[B]"});
    EXPECT_EQ(bad.code, kExitUserError);
    EXPECT_NE(bad.err.find("IndexOutOfRange"), std::string::npos);
    EXPECT_EQ(run({"splice", "[N]", "x", "[B]"}).code, kExitUserError);
    EXPECT_EQ(run({"splice", "[Q]", "0", "[B]"}).code, kExitUserError);
}

TEST(CliUsage, HelpAndMisuse) {
    EXPECT_EQ(run({"--help"}).code, kExitOk);
    EXPECT_EQ(run({}).code, kExitUserError);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUserError);
    EXPECT_EQ(run({"splice", "[N]"}).code, kExitUserError);
}

TEST_F(CliWorkspace, ComposePrintsAndStores) {
    Outcome r = run({"compose", "--workspace", ws(), "s", "1", "m", "--as", "sm"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, "(N, [N,N,N,N])\n");
    Outcome shown = run({"show", "--workspace", ws()});
    EXPECT_NE(shown.out.find("term sm = (sum3 leaf N (mul2 leaf N leaf N) leaf N)\n"), std::string::npos);
    EXPECT_EQ(run({"compose", "--workspace", ws(), "s", "1", "m", "--as", "sm"}).code, kExitUserError);
}

TEST_F(CliWorkspace, ComposeWithoutStoringLeavesFileAlone) {
    std::string before = run({"show", "--workspace", ws()}).out;
    EXPECT_EQ(run({"compose", "--workspace", ws(), "s", "0", "idn"}).out, "(N, [N,N,N])\n");
    EXPECT_EQ(run({"show", "--workspace", ws()}).out, before);
}

TEST_F(CliWorkspace, ComposeColorMismatch) {
    Outcome r = run({"compose", "--workspace", ws(), "s", "1", "z"});
    EXPECT_EQ(r.code, kExitUserError);
    EXPECT_NE(r.err.find("ColorMismatch"), std::string::npos);
    EXPECT_NE(r.err.find("N"), std::string::npos);
    EXPECT_NE(r.err.find("B"), std::string::npos);
    EXPECT_EQ(run({"compose", "--workspace", ws(), "s", "1", "nope"}).code, kExitUserError);
}

TEST_F(CliWorkspace, Eval) {
    ASSERT_EQ(run({"compose", "--workspace", ws(), "s", "1", "m", "--as", "sm"}).code, kExitOk);
    Outcome r = run({"eval", "--workspace", ws(), "sm", "2", "3", "4", "5"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, "19\n");
    EXPECT_EQ(run({"eval", "--workspace", ws(), "idn", "7"}).out, "7\n");
    EXPECT_EQ(run({"eval", "--workspace", ws(), "isz", "0"}).out, "true\n");
    EXPECT_EQ(run({"eval", "--workspace", ws(), "sm", "2", "3"}).code, kExitUserError);
    EXPECT_EQ(run({"eval", "--workspace", ws(), "sm", "2", "3", "true", "5"}).code, kExitUserError);
    EXPECT_EQ(run({"eval", "--workspace", ws(), "ghost", "1"}).code, kExitUserError);
}

TEST(CliWorkspaceErrors, MissingOrBrokenFile) {
    EXPECT_EQ(run({"show", "--workspace", "/nonexistent/file.ws"}).code, kExitUserError);
    EXPECT_EQ(run({"show"}).code, kExitUserError);
}

TEST(CliCheckLaws, FnAndFree) {
    Outcome fn = run({"check-laws", "fn", "--trials", "50", "--seed", "42"});
    EXPECT_EQ(fn.code, kExitOk);
    EXPECT_EQ(last_line(fn.out), "PASS 50");
    Outcome free = run({"check-laws", "free", "--trials", "50"});
    EXPECT_EQ(free.code, kExitOk);
    EXPECT_EQ(last_line(free.out), "PASS 50");
}

TEST(CliCheckLaws, Reproducible) {
    std::vector<std::string> args{"check-laws", "fn", "--trials", "30", "--seed", "7", "--break-cast"};
    Outcome a = run(args), b = run(args);
    EXPECT_EQ(a.code, kExitLawFailure);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(last_line(a.out).substr(0, 5), "FAIL ");
    EXPECT_EQ(last_line(a.out).substr(last_line(a.out).rfind(' ') + 1), "7");
}

TEST(CliCheckLaws, ConfigErrors) {
    EXPECT_EQ(run({"check-laws", "fn", "--trials", "0"}).code, kExitConfigError);
    EXPECT_EQ(run({"check-laws", "fn", "--nat-bound", "abc"}).code, kExitConfigError);
    EXPECT_EQ(run({"check-laws", "fn", "--config", "/nonexistent.cfg"}).code, kExitConfigError);
    EXPECT_EQ(run({"check-laws", "nope"}).code, kExitUserError);
    EXPECT_EQ(run({"check-laws", "free", "--break-cast"}).code, kExitUserError);
}

TEST(CliCheckLaws, ConfigFileAndFlagPrecedence) {
    auto cfg = std::filesystem::temp_directory_path() / "operad_cli_test.cfg";
    {
        std::ofstream f(cfg);
        f << "trials = 12\nseed = 3\n";
    }
    Outcome from_file = run({"check-laws", "free", "--config", cfg.string()});
    EXPECT_EQ(last_line(from_file.out), "PASS 12");
    Outcome flag_wins = run({"check-laws", "free", "--config", cfg.string(), "--trials", "9"});
    EXPECT_EQ(last_line(flag_wins.out), "PASS 9");
    {
        std::ofstream f(cfg);
        f << "trials = lots\n";
    }
    EXPECT_EQ(run({"check-laws", "free", "--config", cfg.string()}).code, kExitConfigError);
    std::filesystem::remove(cfg);
}

TEST(CliBinary, SmokeTest) {
    std::string cmd = std::string(OPERAD_BINARY) + " splice \"[N,N,N]\" 1 \"[B,B]\"";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    ASSERT_TRUE(pipe);
    std::array<char, 128> buf{};
    std::string out;
    while (fgets(buf.data(), static_cast<int>(buf.size()), pipe.get())) out += buf.data();
    EXPECT_EQ(out, "[N,B,B,N]\n");
    int status = pclose(pipe.release());
    EXPECT_EQ(WEXITSTATUS(status), 0);
    EXPECT_EQ(WEXITSTATUS(std::system((std::string(OPERAD_BINARY) + " splice \"[N]\" 3 \"[B]\" 2>/dev/null").c_str())),
              2);
}
