#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/csv.hpp"
#include "otto/otto_cycle.hpp"
#include "otto/regime.hpp"
#include "otto/spectrum.hpp"

namespace otto::cli {

/// Fixed header of cycle and sweep output.
const std::vector<std::string>& cycle_columns();

/// start, start + h, ..., stop with `steps` points (steps == 1 gives start).
/// Throws UsageError for steps < 1 or stop < start.
std::vector<double> linear_grid(double start, double stop, int steps);

/// One cycle row per J; rows are evaluated in parallel and kept in grid order.
CsvDocument cycle_table(const SpinPair& pair, const CycleParams& base, const std::vector<double>& js,
                        std::vector<std::string> metadata = {});

CsvDocument spectrum_table(const SpinPair& pair, double B, double J, bool sorted);

struct CocSummary {
  double jx = 0.0;
  double jc = 0.0;
  std::optional<double> etaMaxObserved;
  std::optional<double> etaMaxClosedForm;
  std::size_t engineViolations = 0;
  bool secondLawApplicable = false;
};

CsvDocument coc_table(const SpinPair& pair, const CycleParams& params, CocSummary* summary = nullptr);

struct VerifyOptions {
  std::uint64_t seed = 20211104;
  std::size_t points = 10000;
  int maxTwoS = 9;
  /// Passed through to the lemma suite; leave empty for the real J_c.
  CriticalCouplingFn criticalCoupling;
};

/// Oracle comparisons plus the lemma suite. Writes a deterministic report
/// and returns kOk or kVerificationFailure.
int run_verify(const VerifyOptions& options, std::ostream& out);

/// Full command line (args[0] is the subcommand). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace otto::cli
