#include <gtest/gtest.h>

#include <cstdlib>

#include "golden_cases.hpp"
#include "sinkloc/instance_io.hpp"

namespace sinkloc {
namespace {

using testing::read_file;

const std::string kGoldenDir = SINKLOC_GOLDEN_DIR;

TEST(CliGoldenTest, OutputsAndExitCodes) {
  const auto cases = testing::load_golden_cases(kGoldenDir);
  ASSERT_FALSE(cases.empty());
  const bool update = std::getenv("SINKLOC_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : cases) {
    const testing::GoldenRun run = testing::run_golden_case(c, kGoldenDir);
    EXPECT_EQ(run.exit_code, c.exit_code) << c.name << ": " << run.output;
    const std::string golden = kGoldenDir + "/" + c.name + ".out";
    if (update) {
      std::ofstream(golden, std::ios::binary) << run.output;
      continue;
    }
    EXPECT_EQ(run.output, read_file(golden)) << c.name;
  }
}

TEST(CliGoldenTest, CanonicalFilesRoundTrip) {
  for (const char* name : {"path4.txt", "single_edge.txt", "gen_path3.out", "gen_random_50_seed7.out", "gen_single.out"}) {
    const std::string text = read_file(kGoldenDir + "/" + name);
    EXPECT_EQ(serialize_instance(parse_instance(text)), text) << name;
  }
}

TEST(CliGoldenTest, GenerationIsDeterministic) {
  const std::vector<std::string> args{"gen", "--n", "50", "--seed", "7"};
  std::ostringstream a;
  std::ostringstream b;
  std::ostringstream err;
  ASSERT_EQ(cli::run(args, a, err), 0);
  ASSERT_EQ(cli::run(args, b, err), 0);
  EXPECT_EQ(a.str(), b.str());
}

TEST(CliGoldenTest, HelpExitsCleanly) {
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cli::run({"--help"}, out, err), 0);
  EXPECT_NE(out.str().find("solve"), std::string::npos);
}

}  // namespace
}  // namespace sinkloc
