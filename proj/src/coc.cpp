#include "otto/coc.hpp"

#include <stdexcept>

#include "otto/regime.hpp"

namespace otto {

std::string_view to_string(CocClass c) noexcept {
  switch (c) {
    case CocClass::FieldOnly: return "FIELD_ONLY";
    case CocClass::CouplingOnly: return "COUPLING_ONLY";
    case CocClass::Aligned: return "ALIGNED";
    case CocClass::Opposed: return "OPPOSED";
    case CocClass::Null: return "NULL";
  }
  return "NULL";
}

CocClass classify_coc(int x, int twoY) noexcept {
  if (x == 0 && twoY == 0) return CocClass::Null;
  if (twoY == 0) return CocClass::FieldOnly;
  if (x == 0) return CocClass::CouplingOnly;
  return ((x > 0) == (twoY > 0)) ? CocClass::Aligned : CocClass::Opposed;
}

std::optional<double> coc_efficiency(const CocRecord& r, const CycleParams& params) {
  const double eta0 = 1.0 - params.B2 / params.B1;
  switch (r.caseClass) {
    case CocClass::FieldOnly:
      if (r.x > 0) return eta0;
      return std::nullopt;
    case CocClass::CouplingOnly:
      if (r.twoY > 0 && params.J > 0.0) return 0.0;
      return std::nullopt;
    case CocClass::Aligned:
    case CocClass::Opposed: {
      if (r.x <= 0) return std::nullopt;
      // 8 y J / (x B1) with y = twoY / 2
      const double den = 1.0 + 4.0 * r.twoY * params.J / (r.x * params.B1);
      if (den <= 0.0) return std::nullopt;
      return eta0 / den;
    }
    case CocClass::Null: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<CocRecord> enumerate_cocs(const Spectrum& spectrum, const CycleParams& params) {
  params.validate();
  const auto& levels = spectrum.levels();
  std::vector<CocRecord> out;
  out.reserve(levels.size() * (levels.size() - 1));
  const double hot = 1.0 / params.T1;
  const double cold = 1.0 / params.T2;
  for (const auto& from : levels) {
    for (const auto& to : levels) {
      if (from.k == to.k) continue;
      CocRecord r;
      r.initialK = from.k;
      r.finalK = to.k;
      r.x = to.m1 - from.m1;
      // E = m1 B - 8 m2 J, so the coupling heat is carried by the drop in m2.
      r.twoY = from.twoM2 - to.twoM2;
      const double coupling = 4.0 * params.J * r.twoY;  // 8 J y
      r.q1 = r.x * params.B1 + coupling;
      r.q2 = r.x * params.B2 + coupling;
      r.w = r.x * (params.B1 - params.B2);
      r.dS = r.x * (params.B2 * cold - params.B1 * hot) + coupling * (cold - hot);
      // Without coupling y carries no heat, so the cycle is classified by x alone.
      r.caseClass = classify_coc(r.x, params.J > 0.0 ? r.twoY : 0);
      r.efficiency = coc_efficiency(r, params);
      out.push_back(r);
    }
  }
  return out;
}

MaxCocEfficiency max_engine_coc_efficiency(const Spectrum& spectrum, const CycleParams& params) {
  params.validate();
  const auto& pair = spectrum.pair();
  if (!(2.0 * pair.twoMaxM2() * params.J < params.B1)) {
    throw std::domain_error("maximum COC efficiency needs 4 s1 (2 s2 + 1) J < B1");
  }
  std::optional<MaxCocEfficiency> best;
  for (const auto& r : enumerate_cocs(spectrum, params)) {
    if (r.x <= 0 || !r.efficiency) continue;
    if (!best || *r.efficiency > best->etaMaxObserved) best = MaxCocEfficiency{*r.efficiency, r};
  }
  if (!best) throw std::domain_error("spectrum has no engine cycles");
  return *best;
}

SecondLawAudit second_law_audit(const Spectrum& spectrum, const CycleParams& params) {
  params.validate();
  SecondLawAudit audit;
  const auto bounds = coupling_bounds(spectrum.pair(), params);
  audit.applicable = bounds.engineRegime && params.J > 0.0 && params.J < bounds.jx;
  for (const auto& r : enumerate_cocs(spectrum, params)) {
    if (r.x > 0) ++audit.engineRecords;
    if (r.dS < 0.0) {
      ++audit.negativeEntropyRecords;
      ++audit.negativeByClass[static_cast<int>(r.caseClass)];
      if (r.x > 0) {
        ++audit.engineViolations;
        audit.violations.push_back(r);
      }
    }
  }
  return audit;
}

}  // namespace otto
