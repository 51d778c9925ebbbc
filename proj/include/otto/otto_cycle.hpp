#pragma once

// Average energetics of the quasi-static four-stroke Otto cycle.
//
//   Stage 1: thermalise at (B1, T1)    Stage 2: B1 -> B2, populations frozen
//   Stage 3: thermalise at (B2, T2)    Stage 4: B2 -> B1, populations frozen
//
// Sign convention: Q1 is heat absorbed from the hot bath, Q2 heat rejected
// to the cold bath and W = Q1 - Q2 the work extracted per cycle.

#include <optional>
#include <string_view>
#include <utility>

#include "otto/ensemble.hpp"
#include "otto/spectrum.hpp"

namespace otto {

struct CycleParams {
  double B1 = 0.0;
  double B2 = 0.0;
  double T1 = 0.0;
  double T2 = 0.0;
  double J = 0.0;

  /// T2 / T1.
  double theta() const noexcept { return T2 / T1; }

  /// Requires B1 >= B2 > 0, T1 >= T2 > 0, J >= 0, all finite. The equality
  /// cases are admitted so that degenerate cycles (no field change or no
  /// temperature gradient) can be evaluated; they never operate as engines.
  void validate() const;
};

enum class Regime { Engine, Refrigerator, Heater, Accelerator, Null };

std::string_view to_string(Regime r) noexcept;

/// Classifies a cycle from the signs of (Q1, Q2, W).
Regime classify_regime(double Q1, double Q2, double W) noexcept;

struct XYFactors {
  double X = 0.0;
  double Y = 0.0;
};

struct CycleReport {
  double X = 0.0;
  double Y = 0.0;
  double Q1 = 0.0;
  double Q2 = 0.0;
  double W = 0.0;
  std::optional<double> eta;  ///< 1 - Q2/Q1, only when Q1 > 0
  double dS = 0.0;
  Regime regime = Regime::Null;

  // Uncoupled (J = 0) cycle at the same fields and temperatures.
  double v = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double w = 0.0;
  double eta0 = 0.0;
  double dS0 = 0.0;
};

/// X = 1/2 sum m1 (P - P'), Y = sum m2 (P' - P) over the J-dependent levels.
/// stage1 and stage3 must be built on the same spectrum.
XYFactors xy_factors(const ThermalState& stage1, const ThermalState& stage3);

CycleReport average_cycle_report(const SpinPair& pair, const CycleParams& params);

/// Same as above for callers that already hold the two thermal states.
CycleReport average_cycle_report(const ThermalState& stage1, const ThermalState& stage3,
                                 const CycleParams& params);

/// |W - 2(B1-B2) Tr[h0 (rho1 - rho2)]| with the trace taken over dense
/// density matrices built by the oracle.
double trace_work_deviation(const SpinPair& pair, const CycleParams& params);

/// trace_work_deviation < 1e-9.
bool trace_consistency_check(const SpinPair& pair, const CycleParams& params);

}  // namespace otto
