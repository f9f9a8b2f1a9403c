#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbits/involution.hpp"

namespace orbits {

struct Failure {
  std::string claim;
  std::string input;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string suite;
  int n_min = 1;
  int n_max = 0;
  std::optional<int> k_max;
  long long checks_run = 0;
  /// Total failures; only the first few are kept in `failures`.
  long long failure_count = 0;
  std::vector<Failure> failures;
  /// Experiments and logged observations that are reported, not asserted.
  std::vector<std::string> notes;
  double elapsed_seconds = 0.0;

  bool passed() const { return failure_count == 0; }
};

/// Cover relation of the whole of S_n^2 by an all-pairs scan.
/// Throws Error{TooLarge} for n above 8 (or ORBIT_POSET_MAX_N when set).
std::map<Involution, std::vector<Involution>> brute_covers(int n);

/// Names accepted by verify_suite, in the order `--all` runs them.
const std::vector<std::string>& suite_names();

/// Default largest n a suite checks when none is requested.
int default_suite_n(std::string_view name);

/// Runs one exhaustive suite for n up to n_max (default per suite) and,
/// when given, lengths up to k_max.
/// Throws Error{UnknownSuite}, Error{TooLarge}.
VerificationReport verify_suite(std::string_view name, std::optional<int> n_max = std::nullopt,
                                std::optional<int> k_max = std::nullopt);

}  // namespace orbits
