#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "golden_runner.hpp"

namespace {

const std::filesystem::path kRoot = L0_GOLDEN_DIR;

class Golden : public ::testing::TestWithParam<golden::Case> {};

TEST_P(Golden, MatchesExpectedAndIsDeterministic) {
  const auto& c = GetParam();
  std::string first = golden::render(c, kRoot / "bundle");
  std::string second = golden::render(c, kRoot / "bundle");
  EXPECT_EQ(first, second) << "output differs between two runs";

  auto expected_path = kRoot / "expected" / (c.name + ".txt");
  if (std::getenv("L0_UPDATE_GOLDEN")) {
    std::filesystem::create_directories(expected_path.parent_path());
    std::ofstream(expected_path, std::ios::binary) << first;
    GTEST_SKIP() << "rewrote " << expected_path;
  }
  std::string expected = golden::read_file(expected_path);
  ASSERT_FALSE(expected.empty()) << "missing golden file " << expected_path;
  EXPECT_EQ(first, expected);
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(golden::load_cases(kRoot / "cases.txt")),
                         [](const auto& info) { return info.param.name; });

}  // namespace
