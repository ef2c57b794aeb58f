// Acceptance gate: runs every reproduction check and prints one line per
// item. Exits nonzero if any item fails, so CTest sees the whole picture.

#include <cstdio>

#include "coderiv/verify.hpp"

int main() {
  std::vector<coderiv::VerifyItem> items = coderiv::verify_all();
  int width = static_cast<int>(items.size());
  bool all = true;
  for (size_t i = 0; i < items.size(); ++i) {
    const auto &it = items[i];
    std::printf("[%2zu/%d] %s %s :: %s\n", i + 1, width,
                it.passed ? "PASS" : "FAIL", it.name.c_str(),
                it.detail.c_str());
    all = all && it.passed;
  }
  std::printf("%s\n", all ? "acceptance: all checks passed"
                          : "acceptance: SOME CHECKS FAILED");
  return all ? 0 : 1;
}
