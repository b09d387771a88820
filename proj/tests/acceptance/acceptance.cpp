// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <string>

#include "../golden/golden_runner.hpp"
#include "l0/oracle/suites.hpp"

namespace {

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds
};

bool report(const Criterion& c, const l0::oracle::SuiteResult& r, std::size_t min_cases) {
  const bool enough = r.cases >= min_cases;
  const bool in_time = r.seconds < c.time_limit;
  const bool ok = r.passed() && enough && in_time;
  std::printf("criterion %d %s: %s  [%zu cases (need >= %zu), %zu failures, %.2f s (limit %.0f s)%s%s]\n", c.id,
              c.title.c_str(), ok ? "PASS" : "FAIL", r.cases, min_cases, r.failures, r.seconds, c.time_limit,
              r.note.empty() ? "" : "; ", r.note.c_str());
  if (!r.first_failure.empty()) std::printf("    first failure: %s\n", r.first_failure.c_str());
  return ok;
}

l0::oracle::SuiteResult golden_suite() {
  l0::oracle::SuiteResult r;
  r.name = "golden";
  auto start = std::chrono::steady_clock::now();
  const std::filesystem::path root = L0_GOLDEN_DIR;
  for (const auto& c : golden::load_cases(root / "cases.txt")) {
    ++r.cases;
    std::string a = golden::render(c, root / "bundle");
    std::string b = golden::render(c, root / "bundle");
    std::string expected = golden::read_file(root / "expected" / (c.name + ".txt"));
    if (a != b || a != expected) {
      ++r.failures;
      if (r.first_failure.empty()) r.first_failure = c.name + (a != b ? ": differs between runs" : ": differs from golden");
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.note = "byte-identical across two runs and against tests/golden/expected";
  return r;
}

}  // namespace

int main() {
  using namespace l0::oracle;
  const SuiteSizes sizes;  // full acceptance sizes
  bool ok = true;
  ok &= report({1, "stratification vs per-atom rank oracle", 60}, suite_stratification(sizes), 500);
  ok &= report({2, "underdetermined homogeneous systems", 30}, suite_elimination(sizes), 500);
  ok &= report({3, "Helly verdict, construction and witness", 120}, suite_helly(sizes), 600);
  ok &= report({4, "orthogonal witness of proper submodules", 30}, suite_orthogonal(sizes), 200);
  ok &= report({5, "sample-wise solver vs classical per-atom Helly", 30}, suite_samplewise(sizes), 200);
  // tolerance 1e-9; instances compared when every fiber's smallest nonzero
  // singular value and every budget gap exceed 1e-6
  ok &= report({6, "float mode reproduces exact verdicts", 60}, suite_float(sizes), 200);
  ok &= report({7, "CLI golden files, deterministic", 60}, golden_suite(), 20);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}
