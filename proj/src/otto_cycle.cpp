#include "otto/otto_cycle.hpp"

#include <cmath>
#include <stdexcept>

#include "otto/oracle.hpp"

namespace otto {

void CycleParams::validate() const {
  const bool finite = std::isfinite(B1) && std::isfinite(B2) && std::isfinite(T1) &&
                      std::isfinite(T2) && std::isfinite(J);
  if (!finite) throw std::invalid_argument("cycle parameters must be finite");
  if (!(B2 > 0.0 && B1 >= B2)) throw std::invalid_argument("cycle needs B1 >= B2 > 0");
  if (!(T2 > 0.0 && T1 >= T2)) throw std::invalid_argument("cycle needs T1 >= T2 > 0");
  if (!(J >= 0.0)) throw std::invalid_argument("coupling J must be non-negative");
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::Engine: return "engine";
    case Regime::Refrigerator: return "refrigerator";
    case Regime::Heater: return "heater";
    case Regime::Accelerator: return "accelerator";
    case Regime::Null: return "null";
  }
  return "null";
}

Regime classify_regime(double Q1, double Q2, double W) noexcept {
  if (W > 0.0 && Q1 > 0.0 && Q2 > 0.0) return Regime::Engine;
  if (W < 0.0 && Q1 < 0.0 && Q2 < 0.0) return Regime::Refrigerator;
  if (W < 0.0 && Q1 < 0.0 && Q2 >= 0.0) return Regime::Heater;
  if (W < 0.0 && Q1 >= 0.0 && Q2 > 0.0) return Regime::Accelerator;
  return Regime::Null;
}

XYFactors xy_factors(const ThermalState& stage1, const ThermalState& stage3) {
  if (!(stage1.spectrum.pair() == stage3.spectrum.pair()) || stage1.size() != stage3.size()) {
    throw std::invalid_argument("xy_factors: states live on different spectra");
  }
  const auto& levels = stage1.spectrum.levels();
  // sum_k (P_k - P'_k) = 0, so m1 may be measured from the ground band.
  // This keeps the result accurate when both ground populations are ~1.
  const int m1Ref = levels.front().m1;
  double x = 0.0;
  double y = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double dP = stage1[i] - stage3[i];
    x += (levels[i].m1 - m1Ref) * dP;
    if (levels[i].twoM2 != 0) y -= levels[i].m2() * dP;
  }
  return {0.5 * x, y};
}

namespace {

// -Q1/T1 + Q2/T2 as one sum over levels, coefficients referenced to k = 1.
double entropy_production(const ThermalState& s1, const ThermalState& s3, const CycleParams& p) {
  const auto& levels = s1.spectrum.levels();
  const auto& ref = levels.front();
  double dS = 0.0;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const double dm1 = levels[i].m1 - ref.m1;
    const double dm2 = levels[i].m2() - ref.m2();
    const double coeff = (dm1 * p.B2 - 8.0 * dm2 * p.J) / p.T2 - (dm1 * p.B1 - 8.0 * dm2 * p.J) / p.T1;
    dS += (s1[i] - s3[i]) * coeff;
  }
  return dS;
}

}  // namespace

CycleReport average_cycle_report(const ThermalState& stage1, const ThermalState& stage3,
                                 const CycleParams& params) {
  params.validate();
  CycleReport r;
  const auto [X, Y] = xy_factors(stage1, stage3);
  r.X = X;
  r.Y = Y;
  r.Q1 = 2.0 * params.B1 * X + 8.0 * params.J * Y;
  r.Q2 = 2.0 * params.B2 * X + 8.0 * params.J * Y;
  r.W = r.Q1 - r.Q2;
  if (r.Q1 > 0.0) r.eta = 1.0 - r.Q2 / r.Q1;
  r.dS = entropy_production(stage1, stage3, params);
  r.regime = classify_regime(r.Q1, r.Q2, r.W);

  const auto& spectrum = stage1.spectrum;
  const auto base1 = occupation_probabilities(spectrum, params.B1, params.T1, 0.0);
  const auto base3 = occupation_probabilities(spectrum, params.B2, params.T2, 0.0);
  r.v = xy_factors(base1, base3).X;
  r.q1 = 2.0 * params.B1 * r.v;
  r.q2 = 2.0 * params.B2 * r.v;
  r.w = r.q1 - r.q2;
  r.eta0 = 1.0 - params.B2 / params.B1;
  r.dS0 = -r.q1 / params.T1 + r.q2 / params.T2;
  return r;
}

CycleReport average_cycle_report(const SpinPair& pair, const CycleParams& params) {
  params.validate();
  const Spectrum spectrum(pair);
  const auto s1 = occupation_probabilities(spectrum, params.B1, params.T1, params.J);
  const auto s3 = occupation_probabilities(spectrum, params.B2, params.T2, params.J);
  return average_cycle_report(s1, s3, params);
}

double trace_work_deviation(const SpinPair& pair, const CycleParams& params) {
  params.validate();
  const auto report = average_cycle_report(pair, params);
  const auto h1 = build_hamiltonian(pair, params.B1, params.J);
  const auto h2 = build_hamiltonian(pair, params.B2, params.J);
  const auto rho1 = thermal_density_matrix(h1, params.T1);
  const auto rho2 = thermal_density_matrix(h2, params.T2);
  const auto h0 = zeeman_operator(pair);
  const double traceWork = 2.0 * (params.B1 - params.B2) * (trace_product(h0, rho1) - trace_product(h0, rho2));
  return std::abs(report.W - traceWork);
}

bool trace_consistency_check(const SpinPair& pair, const CycleParams& params) {
  return trace_work_deviation(pair, params) < 1e-9;
}

}  // namespace otto
