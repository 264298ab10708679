#pragma once

// Invariant suites shared by the `verify` CLI subcommand and the acceptance
// runner. Each suite reports how many individual checks ran and how many
// failed, with the first few failures described.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace choc {

struct SuiteReport {
  std::string name;
  unsigned bound = 0;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // at most kMaxReportedFailures

  static constexpr std::size_t kMaxReportedFailures = 10;

  // describe() is only called for failures that get recorded.
  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++checked;
    if (ok) return;
    ++failed;
    if (failures.size() < kMaxReportedFailures) failures.emplace_back(describe());
  }
  bool passed() const { return failed == 0; }

  // "suite=<name> checked=<k> failed=<f>"
  std::string summary() const;
};

// nim, doubling, decomposition, sums, ca, section, half, xor.
const std::vector<std::string>& suite_names();

bool is_suite(std::string_view name);

// The bound each suite uses when none is given.
unsigned default_bound(std::string_view suite);

// Runs one suite up to `bound` (side length, order, or operand limit depending
// on the suite). Throws DomainError for an unknown name.
SuiteReport run_suite(std::string_view suite, unsigned bound);

}  // namespace choc
