#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace permtree {

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 5;  // random elements / generating sets per group
  bool include_alt7 = false;
};

struct ModuleResult {
  std::string module;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

struct VerifyReport {
  std::vector<ModuleResult> modules;
  bool passed() const;
  std::string text() const;
};

/// Every module's invariants over the fixture corpus.
VerifyReport run_verify(const VerifyOptions& opt = {});

}  // namespace permtree
