#pragma once

// Complete Otto cycles: the medium leaves level i at the hot bath, sits in
// level f through the cold half of the cycle, and returns to i. Each ordered
// pair (i, f) of distinct levels is one such cycle.

#include <optional>
#include <string_view>
#include <vector>

#include "otto/otto_cycle.hpp"
#include "otto/spectrum.hpp"

namespace otto {

enum class CocClass { FieldOnly, CouplingOnly, Aligned, Opposed, Null };

std::string_view to_string(CocClass c) noexcept;

/// Class from the signs of x and y: x only, y only, same sign, opposite sign.
CocClass classify_coc(int x, int twoY) noexcept;

struct CocRecord {
  int initialK = 0;
  int finalK = 0;
  int x = 0;     ///< m1(f) - m1(i)
  int twoY = 0;  ///< 2 (m2(i) - m2(f)); then q1 = x B1 + 8 J y = E_f(B1) - E_i(B1)
  double q1 = 0.0;
  double q2 = 0.0;
  double w = 0.0;
  double dS = 0.0;
  CocClass caseClass = CocClass::Null;
  std::optional<double> efficiency;

  double y() const noexcept { return 0.5 * twoY; }
};

/// n(n-1) records ordered by (initialK, finalK).
std::vector<CocRecord> enumerate_cocs(const Spectrum& spectrum, const CycleParams& params);

/// Engine efficiency of one cycle: eta0 for FieldOnly, 0 for CouplingOnly with
/// heat intake, eta0 / (1 + 8 y J / (x B1)) for Aligned and Opposed. Empty when
/// the cycle does not absorb heat from the hot bath as an engine (x < 0, or
/// Q1 <= 0).
std::optional<double> coc_efficiency(const CocRecord& record, const CycleParams& params);

struct MaxCocEfficiency {
  double etaMaxObserved = 0.0;
  CocRecord witness;
};

/// Largest engine efficiency among all cycles with x > 0. The witness is the
/// first maximiser in enumeration order. Throws std::domain_error unless
/// 4 s1 (2 s2 + 1) J < B1.
MaxCocEfficiency max_engine_coc_efficiency(const Spectrum& spectrum, const CycleParams& params);

struct SecondLawAudit {
  bool applicable = false;  ///< B2 > B1 theta and 0 < J < Jx
  std::size_t engineRecords = 0;
  std::size_t engineViolations = 0;  ///< x > 0 with dS < 0
  std::size_t negativeEntropyRecords = 0;
  std::size_t negativeByClass[5] = {};  ///< indexed by CocClass
  std::vector<CocRecord> violations;    ///< engine records with dS < 0

  bool passed() const noexcept { return !applicable || engineViolations == 0; }
};

SecondLawAudit second_law_audit(const Spectrum& spectrum, const CycleParams& params);

}  // namespace otto
