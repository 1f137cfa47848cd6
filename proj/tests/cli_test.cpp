#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "inconlog/cli.hpp"
#include "inconlog/extensions.hpp"
#include "inconlog/theory_io.hpp"

using namespace inconlog;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

class ScopedEnv {
public:
    ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
    ~ScopedEnv() { ::unsetenv(name_); }

private:
    const char* name_;
};

} // namespace

TEST(Check, ValidAndCyclic) {
    auto good = run({"check", fx("example1.rt")});
    EXPECT_EQ(good.code, 0);
    EXPECT_EQ(good.out, "valid\n");
    auto bad = run({"check", fx("cyclic.rt")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_EQ(bad.out, "cycle: a < b < a\n");
}

TEST(Extensions, ListsSortedMembersAndCount) {
    EXPECT_EQ(run({"extensions", fx("example1.rt")}).out, "{p1,p2,p4}\n(count: 1)\n");
    auto r = run({"extensions", fx("example3.rt")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{a,nb}\n{b,na}\n{na,nb}\n(count: 3)\n");
}

TEST(Entails, ExitCodeFollowsTheAnswer) {
    auto yes = run({"entails", fx("example1.rt"), "psi"});
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(yes.out, "yes\n");
    auto no = run({"entails", fx("example3.rt"), "a"});
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(no.out, "no\n");
    EXPECT_EQ(run({"entails", "--credulous", fx("example3.rt"), "a"}).code, 0);
}

TEST(Models, OnePerLine) {
    EXPECT_EQ(run({"models", fx("example1.rt")}).out, "{alpha,phi,psi}\n");
    EXPECT_EQ(line_count(run({"models", fx("example3.rt")}).out), 3u);
}

TEST(Conditional, Answers) {
    EXPECT_EQ(run({"conditional", fx("example3.rt"), "a", "b"}).code, 1);
    auto r = run({"conditional", fx("example3.rt"), "a & !b", "a"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "yes\n");
}

TEST(Revise, WritesAReadableTheory) {
    auto path = std::filesystem::temp_directory_path() / "inconlog_cli_revise.rt";
    auto r = run({"revise", fx("example1.rt"), "!psi", "-o", path.string()});
    ASSERT_EQ(r.code, 0);
    auto revised = load_theory(path.string());
    EXPECT_EQ(revised, revise(load_theory(fx("example1.rt")), parse_formula("!psi")));
    EXPECT_TRUE(skeptical_entails(revised, parse_formula("!psi")));
    std::filesystem::remove(path);
}

TEST(Revise, UnwritableOutputIsAnInputError) {
    EXPECT_EQ(run({"revise", fx("example1.rt"), "a", "-o", "/nonexistent/dir/x.rt"}).code, 2);
}

TEST(Af, ExportsTheFirstLinearFramework) {
    auto r = run({"af", fx("example1.rt")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(line_count(r.out), 6u);
    EXPECT_NE(r.out.find("att(a"), std::string::npos);
}

TEST(Af, Rule4ListsStableExtensions) {
    auto plain = run({"af", "--rule4", fx("example3.rt")});
    EXPECT_EQ(plain.code, 0);
    EXPECT_NE(plain.out.find("% stable delta={a,nb} undermined={b,na}"), std::string::npos);
    EXPECT_EQ(plain.out.find("% ignored"), std::string::npos);
    auto all = run({"af", "--rule4", "--show-ignored", fx("example3.rt")});
    EXPECT_NE(all.out.find("% ignored undermined={na,nb}"), std::string::npos);
}

TEST(Argue, SupportsPerBeliefState) {
    auto r = run({"argue", fx("example1.rt"), "psi"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "Δ = {p1,p2,p4}\n  {p1,p2} ⇒ psi\n");
    auto none = run({"argue", fx("example1.rt"), "!psi"});
    EXPECT_EQ(none.out, "Δ = {p1,p2,p4}\n  not believed\n");
}

TEST(Argue, TraceShowsEachExtension) {
    auto r = run({"argue", "--trace", fx("example2.rt"), "b"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("extension p3 > p2 > p1\n", 0), 0u);
    EXPECT_NE(r.out.find("  {p3} ⇏ p2\n"), std::string::npos);
    EXPECT_NE(r.out.find("Δ = {p1,p3}\n  {p3} ⇒ b\n"), std::string::npos);
}

TEST(Atms, LabelsAndNogoods) {
    EXPECT_EQ(run({"atms", fx("chained.atms"), "--node", "n"}).out, "{a1}\n");
    EXPECT_EQ(run({"atms", fx("conflicting.atms"), "--node", "m"}).out, "{a1}\n{a3}\n");
    EXPECT_EQ(run({"atms", fx("conflicting.atms"), "--nogoods"}).out, "{a1,a2}\n");
    EXPECT_EQ(run({"atms", fx("conflicting.atms")}).code, 2);
    EXPECT_EQ(run({"atms", fx("conflicting.atms"), "--node", "m", "--nogoods"}).code, 2);
    EXPECT_EQ(run({"atms", fx("chained.atms"), "--node", "ghost"}).code, 2);
}

TEST(Errors, ParseErrorIsOneDiagnosticLine) {
    auto path = std::filesystem::temp_directory_path() / "inconlog_cli_bad.rt";
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs("premise p1: a &\n", f);
    std::fclose(f);
    auto r = run({"check", path.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err, "error: line 1, column 16: unexpected end of formula\n");
    EXPECT_TRUE(r.out.empty());
    std::filesystem::remove(path);
}

TEST(Errors, InputProblemsExitTwo) {
    EXPECT_EQ(run({"extensions", fx("cyclic.rt")}).code, 2);
    EXPECT_EQ(run({"entails", fx("missing.rt"), "a"}).code, 2);
    EXPECT_EQ(run({"entails", fx("example1.rt"), "a &"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"extensions"}).code, 2);
    EXPECT_EQ(run({"extensions", fx("example1.rt"), "--bogus"}).code, 2);
}

TEST(Errors, HelpExitsZero) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("extensions"), std::string::npos);
}

TEST(Caps, FlagsExitThree) {
    auto r = run({"--max-extensions", "5", "argue", fx("example3.rt"), "a"});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(r.err, "error: more than 5 linear extensions\n");
    EXPECT_EQ(run({"--mus-budget", "2", "argue", fx("example1.rt"), "psi"}).code, 3);
    EXPECT_EQ(run({"--max-atoms", "1", "entails", fx("example1.rt"), "psi"}).code, 0);
}

TEST(Caps, EnvironmentVariables) {
    {
        ScopedEnv env("INCONLOG_MAX_EXTENSIONS", "5");
        EXPECT_EQ(run({"extensions", fx("example3.rt")}).code, 3);
        // An explicit flag wins over the environment.
        EXPECT_EQ(run({"--max-extensions", "100", "extensions", fx("example3.rt")}).code, 0);
    }
    {
        ScopedEnv env("INCONLOG_MUS_BUDGET", "2");
        EXPECT_EQ(run({"argue", fx("example1.rt"), "psi"}).code, 3);
    }
    EXPECT_EQ(run({"extensions", fx("example3.rt")}).code, 0);
}

TEST(Determinism, RepeatedRunsAgree) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"extensions", fx("room.rt")}, {"af", "--rule4", "--show-ignored", fx("example3.rt")},
          {"argue", "--trace", fx("bizet.rt"), "compatriots"}, {"models", fx("dakota.rt")}}) {
        auto first = run(args);
        EXPECT_EQ(run(args).out, first.out);
        EXPECT_FALSE(first.out.empty());
    }
}
