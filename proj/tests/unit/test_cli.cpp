#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

#include "liekring/report.hpp"
#include "liekring/suites.hpp"

using namespace liekring;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(LIE_KRING_EXE) + " " + args + " 2>/dev/null";
  CliRun r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  Report r;
  r.claims = {{"b", "somewhere", ClaimVerdict::fail, "1 * (0)\n", 12},
              {"a", "elsewhere", ClaimVerdict::skipped, std::nullopt, 0}};
  r.normalize();
  EXPECT_EQ(r.claims.front().id, "a");
  EXPECT_EQ(parse_report(serialize(r)), r);
  EXPECT_FALSE(r.all_passed());
}

TEST(Report, RejectsDuplicatesAndMalformedInput) {
  Report r;
  r.claims = {{"a", "x", ClaimVerdict::pass, "ok", 0}, {"a", "y", ClaimVerdict::pass, "ok", 0}};
  EXPECT_THROW(r.normalize(), InternalConsistencyError);
  EXPECT_THROW(parse_report("{\"version\": 1"), ParseError);
  EXPECT_THROW(parse_report(R"({"version":"1","claims":[{"id":"a","paper_location":"","verdict":"maybe","runtime_ms":0,"witness":null}]})"),
               ParseError);
}

TEST(Suites, TorReportRoundTripsAndIsDeterministic) {
  const Report a = run_subcommand("tor", RunOptions{}).report();
  const Report b = run_subcommand("tor", RunOptions{}).report();
  EXPECT_EQ(parse_report(serialize(a)), a);
  EXPECT_EQ(serialize(without_runtimes(a)), serialize(without_runtimes(b)));
  EXPECT_TRUE(a.all_passed());
}

TEST(Suites, UnknownSubcommandThrows) { EXPECT_THROW(run_subcommand("nope", RunOptions{}), DomainError); }

TEST(Suites, FailedClaimsCarryWitnesses) {
  SuiteOutput out;
  detail::SuiteBuilder b(out);
  b.single("boom", "nowhere", []() -> Verdict { throw DomainError("exploded"); });
  b.single("bad", "nowhere", [] { return Verdict{"bad", false, "", ""}; });
  ASSERT_EQ(out.claims.size(), 2u);
  for (const auto& c : out.claims) {
    EXPECT_EQ(c.verdict, ClaimVerdict::fail);
    EXPECT_TRUE(c.witness.has_value());
  }
  EXPECT_EQ(*out.claims[0].witness, "error: exploded");
}

TEST(Cli, DimsPrintsTableRows) {
  const CliRun r = run_cli("dims");
  EXPECT_EQ(r.code, 0);
  for (const char* row : {"varpi1  27", "varpi2  351", "varpi5  78", "varpi4  2925"}) {
    EXPECT_NE(r.out.find(row), std::string::npos) << row;
  }
  EXPECT_NE(r.out.find("SKIP  weyl-order-e8"), std::string::npos);
}

TEST(Cli, TorPrintsPresentation) {
  const CliRun r = run_cli("tor");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("K0 = Z[u]/(u^3), u = lambda1 - 10"), std::string::npos);
}

TEST(Cli, UnknownSubcommandExitsTwo) {
  EXPECT_EQ(run_cli("frobnicate").code, 2);
  EXPECT_EQ(run_cli("").code, 2);
}

TEST(Cli, JsonOutputIsSortedAndDeterministic) {
  const CliRun a = run_cli("table2 --json");
  const CliRun b = run_cli("table2 --json");
  ASSERT_EQ(a.code, 0);
  const Report ra = parse_report(a.out), rb = parse_report(b.out);
  EXPECT_EQ(serialize(without_runtimes(ra)), serialize(without_runtimes(rb)));
  EXPECT_TRUE(std::is_sorted(ra.claims.begin(), ra.claims.end(),
                             [](const auto& x, const auto& y) { return x.id < y.id; }));
  EXPECT_EQ(ra.claims.size(), 3u);
}

TEST(Cli, DumpEmitsCanonicalCharacter) {
  const CliRun r = run_cli("table2 --dump clifford-relation");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("16 * (0,0,0,0,0)"), std::string::npos);
  EXPECT_EQ(run_cli("table2 --dump no-such-claim").code, 2);
}

TEST(Cli, AllowSlowComputesE8Order) {
  const CliRun r = run_cli("dims --allow-slow --json");
  ASSERT_EQ(r.code, 0);
  const Report rep = parse_report(r.out);
  const auto it = std::find_if(rep.claims.begin(), rep.claims.end(), [](const auto& c) { return c.id == "weyl-order-e8"; });
  ASSERT_NE(it, rep.claims.end());
  EXPECT_EQ(it->verdict, ClaimVerdict::pass);
  EXPECT_NE(it->witness->find("696729600"), std::string::npos);
}
