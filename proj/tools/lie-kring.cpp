#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>

#include "liekring/report.hpp"
#include "liekring/suites.hpp"

namespace {

void print_human(const liekring::Report& report) {
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& c : report.claims) {
    std::string tag;
    switch (c.verdict) {
      case liekring::ClaimVerdict::pass: tag = "PASS"; ++passed; break;
      case liekring::ClaimVerdict::fail: tag = "FAIL"; ++failed; break;
      case liekring::ClaimVerdict::skipped: tag = "SKIP"; ++skipped; break;
    }
    std::cout << tag << "  " << c.id << "  [" << c.paper_location << "]  " << c.runtime_ms << " ms\n";
    if (c.witness) {
      std::string line;
      for (char ch : *c.witness + "\n") {
        if (ch == '\n') {
          std::cout << "      " << line << "\n";
          line.clear();
        } else {
          line += ch;
        }
      }
    }
  }
  std::cout << report.claims.size() << " claims: " << passed << " passed, " << failed << " failed, " << skipped
            << " skipped\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the K-theory of E6/Spin(10)"};
  std::string subcommand;
  bool json = false;
  bool allow_slow = false;
  std::string dump_id;
  std::uint64_t seed = liekring::RunOptions{}.seed;
  app.add_option("subcommand", subcommand, "dims | table2 | branch | restrict | tor | tangent | all")->required();
  app.add_flag("--json", json, "machine-readable report");
  app.add_option("--dump", dump_id, "print the full computed object of one claim");
  app.add_option("--seed", seed, "seed for the randomized property suites");
  app.add_flag("--allow-slow", allow_slow, "enable the E8 Weyl group order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const auto& names = liekring::subcommands();
  if (std::find(names.begin(), names.end(), subcommand) == names.end()) {
    std::cerr << "unknown subcommand '" << subcommand << "'\n" << app.help();
    return 2;
  }

  liekring::RunOptions opts;
  opts.seed = seed;
  opts.allow_slow = allow_slow;
  const liekring::SuiteOutput out = liekring::run_subcommand(subcommand, opts);
  const liekring::Report report = out.report();

  if (!dump_id.empty()) {
    auto it = out.dumps.find(dump_id);
    if (it == out.dumps.end()) {
      std::cerr << "no dump recorded for claim '" << dump_id << "' in subcommand " << subcommand << "\n";
      return 2;
    }
    std::cout << it->second;
  } else if (json) {
    std::cout << liekring::serialize(report) << "\n";
  } else {
    print_human(report);
  }
  return report.all_passed() ? 0 : 1;
}
