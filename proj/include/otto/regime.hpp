#pragma once

// Operating-regime predicates and coupling/efficiency bounds for the
// coupled-spin Otto engine, plus a randomized falsification harness for the
// analytic lemmas behind them.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "otto/ensemble.hpp"
#include "otto/otto_cycle.hpp"
#include "otto/spectrum.hpp"

namespace otto {

/// Absolute tolerance for probability comparisons; |a - b| <= this is equality.
inline constexpr double kProbabilityTolerance = 1e-15;

/// Positive work condition B2/T2 > B1/T1 (strict).
bool pwc_holds(const CycleParams& params);

struct CouplingBounds {
  double jc = 0.0;  ///< (B2 - B1 theta) / (4 s (1 - theta))
  double jx = 0.0;  ///< (B2 - B1 theta) / (4 s1 (2 s2 + 1) (1 - theta))
  bool engineRegime = false;  ///< false when the positive work condition fails
};

CouplingBounds coupling_bounds(const SpinPair& pair, const CycleParams& params);

/// Coupling below which a single two-level cycle with x > 0 and y < 0 keeps
/// non-negative entropy production: x (B2 - B1 theta) / (8 |y| (1 - theta)).
/// y is passed doubled. Throws std::invalid_argument unless x > 0 and y < 0.
double j_a_bound(int x, int twoY, const CycleParams& params);

struct EfficiencyBounds {
  std::optional<double> etaUb;   ///< eta0 / (1 - 4 s J / B1), needs 4 s J < B1
  std::optional<double> etaMax;  ///< eta0 / (1 - 4 s1 (2 s2 + 1) J / B1)
  double etaCarnot = 0.0;
  bool ubBelowCarnot = false;
};

EfficiencyBounds efficiency_bounds(const SpinPair& pair, const CycleParams& params);

struct ScenarioFlags {
  bool wcs = false;  ///< P'_k <= P_k for k >= 2 and P'_1 >= P_1
  bool bcs = false;  ///< P'_k > P_k for every lower-half level other than k = 1
};

ScenarioFlags wcs_predicate(const ThermalState& stage1, const ThermalState& stage3);

/// True iff p is majorized by pPrime: every partial sum of pPrime sorted
/// non-increasingly dominates that of p.
bool majorized_by(const std::vector<double>& p, const std::vector<double>& pPrime);

/// Prefix sums taken in canonical index order, without sorting.
bool majorized_by_index_order(const std::vector<double>& p, const std::vector<double>& pPrime);

struct MajorizationDetail {
  bool sorted = false;        ///< {P} < {P'} in the standard sense
  bool indexOrder = false;    ///< same test on the canonical ordering
  bool entropyOrdered = false;  ///< S(P) >= S(P')
  bool variantsAgree() const noexcept { return sorted == indexOrder; }
};

bool majorization_check(const ThermalState& stage1, const ThermalState& stage3);
MajorizationDetail majorization_detail(const ThermalState& stage1, const ThermalState& stage3);

/// (P'_1 - P_1) + (P_n - P'_n), evaluated without cancellation at k = 1.
double ground_top_imbalance(const ThermalState& stage1, const ThermalState& stage3);

/// X - Y1 with Y1 = -Y/s, summed level by level.
double x_minus_y1(const ThermalState& stage1, const ThermalState& stage3);

struct RegimeVerdict {
  bool pwc = false;
  bool wcs = false;
  bool bcs = false;
  bool majorizes = false;
  bool majorizesIndexOrder = false;
  double Jc = 0.0;
  double Jx = 0.0;
  std::optional<double> etaUb;
  std::optional<double> etaMax;
  double etaCarnot = 0.0;
  double L = 0.0;   ///< ground/top imbalance of the uncoupled medium
  double LX = 0.0;  ///< same for the coupled medium
  bool secondLawOk = false;  ///< average entropy production >= 0
};

RegimeVerdict assess_regime(const SpinPair& pair, const CycleParams& params);

// ---------------------------------------------------------------------------
// Lemma suite

using CriticalCouplingFn = std::function<double(const SpinPair&, const CycleParams&)>;

struct LemmaSuiteConfig {
  std::vector<SpinPair> pairs;  ///< empty: every pair with s <= 9/2
  std::size_t points = 10000;   ///< total samples, dealt round-robin to pairs
  std::uint64_t seed = 20211104;
  /// Replaces the J_c formula; only used to show the suite can fail.
  CriticalCouplingFn criticalCoupling;
  std::size_t maxCounterexamplesKept = 20;
};

struct LemmaCounterexample {
  std::string assertion;
  SpinPair pair{1, 1};
  CycleParams params;
  std::string detail;
};

struct AssertionTally {
  std::string id;
  std::string description;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct LemmaReport {
  std::uint64_t seed = 0;
  std::size_t points = 0;
  std::vector<AssertionTally> tallies;
  std::vector<LemmaCounterexample> counterexamples;
  // Informational, never asserted.
  std::size_t indefiniteSamples = 0;  ///< pwc holds but J > J_c
  std::size_t indefiniteEngines = 0;  ///< ... of which ran as an engine
  std::size_t bcsReached = 0;         ///< samples meeting the best-case ordering
  std::size_t majorizationVariantDisagreements = 0;

  std::size_t totalFailures() const;
  bool passed() const { return totalFailures() == 0; }
};

/// Every pair with 2s1 <= 2s2 and s1 + s2 <= maxTwoS / 2.
std::vector<SpinPair> pairs_up_to(int maxTwoS);

/// Throws std::invalid_argument for points == 0.
LemmaReport lemma_suite(const LemmaSuiteConfig& config);

}  // namespace otto
