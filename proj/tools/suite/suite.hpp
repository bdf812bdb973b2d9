#pragma once

// The fixture suite: one check per acceptance criterion, each with a time
// budget. Shared by `hilbtan verify` and the acceptance test binary.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hilbtan/field.hpp"

namespace hilbtan::suite {

struct Outcome {
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct Options {
  std::optional<FieldSpec> field;  // overrides each fixture's default field
  std::string filter;              // substring of the fixture name; empty runs all
  unsigned threads = 1;
};

struct Fixture {
  int id = 0;
  std::string name;
  double budget_seconds = 0;
  bool small_prime_flaky = false;  // skipped over primes below kSmallPrime
  std::function<Outcome(const Options&)> run;
};

inline constexpr std::uint64_t kSmallPrime = 3;

struct Result {
  int id = 0;
  std::string name;
  Outcome outcome;
  double seconds = 0;
  double budget_seconds = 0;

  bool ok() const { return outcome.skipped || (outcome.passed && seconds <= budget_seconds); }
};

const std::vector<Fixture>& fixtures();

/// Runs the matching fixtures in order; `on_result` sees each one as it finishes.
std::vector<Result> run(const Options& opts, const std::function<void(const Result&)>& on_result = {});

/// "PASS  3  name  (1.23 s / 600 s)  detail"
std::string format(const Result& r);

}  // namespace hilbtan::suite
