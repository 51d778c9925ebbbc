#include "otto/regime.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "otto/parallel.hpp"

namespace otto {

bool pwc_holds(const CycleParams& params) { return params.B2 / params.T2 > params.B1 / params.T1; }

CouplingBounds coupling_bounds(const SpinPair& pair, const CycleParams& params) {
  params.validate();
  CouplingBounds b;
  b.engineRegime = pwc_holds(params);
  const double theta = params.theta();
  if (theta >= 1.0) return b;  // no temperature gradient: both bounds collapse to 0
  const double numerator = (params.B2 - params.B1 * theta) / (1.0 - theta);
  b.jc = numerator / (2.0 * pair.twoS());
  b.jx = numerator / (2.0 * pair.twoMaxM2());
  return b;
}

double j_a_bound(int x, int twoY, const CycleParams& params) {
  params.validate();
  if (x <= 0) throw std::invalid_argument("j_a_bound needs x > 0");
  if (twoY >= 0) throw std::invalid_argument("j_a_bound applies only to y < 0");
  const double theta = params.theta();
  if (theta >= 1.0) throw std::invalid_argument("j_a_bound needs T1 > T2");
  // 8|y| = 4|2y|
  return x * (params.B2 - params.B1 * theta) / (4.0 * std::abs(twoY) * (1.0 - theta));
}

EfficiencyBounds efficiency_bounds(const SpinPair& pair, const CycleParams& params) {
  params.validate();
  EfficiencyBounds e;
  const double eta0 = 1.0 - params.B2 / params.B1;
  e.etaCarnot = 1.0 - params.theta();
  const double ubDen = 1.0 - 2.0 * pair.twoS() * params.J / params.B1;
  const double maxDen = 1.0 - 2.0 * pair.twoMaxM2() * params.J / params.B1;
  if (ubDen > 0.0) e.etaUb = eta0 / ubDen;
  if (maxDen > 0.0) e.etaMax = eta0 / maxDen;
  e.ubBelowCarnot = e.etaUb && *e.etaUb < e.etaCarnot;
  return e;
}

namespace {

void require_same_spectrum(const ThermalState& a, const ThermalState& b) {
  if (!(a.spectrum.pair() == b.spectrum.pair()) || a.size() != b.size()) {
    throw std::invalid_argument("states live on different spectra");
  }
}

bool prefix_dominates(const std::vector<double>& p, const std::vector<double>& q) {
  double sp = 0.0;
  double sq = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sp += p[i];
    sq += q[i];
    if (sq < sp - kProbabilityTolerance) return false;
  }
  return true;
}

}  // namespace

ScenarioFlags wcs_predicate(const ThermalState& stage1, const ThermalState& stage3) {
  require_same_spectrum(stage1, stage3);
  const auto& levels = stage1.spectrum.levels();
  ScenarioFlags f;
  f.wcs = stage3[0] >= stage1[0] - kProbabilityTolerance;
  for (std::size_t i = 1; i < levels.size() && f.wcs; ++i) {
    if (stage3[i] > stage1[i] + kProbabilityTolerance) f.wcs = false;
  }
  f.bcs = false;
  bool any = false;
  bool all = true;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i].m1 >= 0) break;
    any = true;
    if (!(stage3[i] > stage1[i] + kProbabilityTolerance)) all = false;
  }
  f.bcs = any && all;
  return f;
}

bool majorized_by(const std::vector<double>& p, const std::vector<double>& pPrime) {
  if (p.size() != pPrime.size()) throw std::invalid_argument("majorization needs equal lengths");
  auto a = p;
  auto b = pPrime;
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  return prefix_dominates(a, b);
}

bool majorized_by_index_order(const std::vector<double>& p, const std::vector<double>& pPrime) {
  if (p.size() != pPrime.size()) throw std::invalid_argument("majorization needs equal lengths");
  return prefix_dominates(p, pPrime);
}

bool majorization_check(const ThermalState& stage1, const ThermalState& stage3) {
  require_same_spectrum(stage1, stage3);
  return majorized_by(stage1.probabilities, stage3.probabilities);
}

MajorizationDetail majorization_detail(const ThermalState& stage1, const ThermalState& stage3) {
  require_same_spectrum(stage1, stage3);
  MajorizationDetail d;
  d.sorted = majorized_by(stage1.probabilities, stage3.probabilities);
  d.indexOrder = majorized_by_index_order(stage1.probabilities, stage3.probabilities);
  d.entropyOrdered = shannon_entropy(stage1) >= shannon_entropy(stage3) - 1e-14;
  return d;
}

double ground_top_imbalance(const ThermalState& stage1, const ThermalState& stage3) {
  require_same_spectrum(stage1, stage3);
  const std::size_t n = stage1.size();
  // P'_1 - P_1 = sum_{k>=2} (P_k - P'_k)
  double groundGain = 0.0;
  for (std::size_t i = 1; i < n; ++i) groundGain += stage1[i] - stage3[i];
  return groundGain + (stage1[n - 1] - stage3[n - 1]);
}

double x_minus_y1(const ThermalState& stage1, const ThermalState& stage3) {
  require_same_spectrum(stage1, stage3);
  const auto& levels = stage1.spectrum.levels();
  const int ts = stage1.spectrum.pair().twoS();
  const int m1Ref = levels.front().m1;
  double u = 0.0;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    // (m1 - m1_ref)/2 - m2/s ; m2/s = twoM2 / 2s
    const double coeff = 0.5 * (levels[i].m1 - m1Ref) - static_cast<double>(levels[i].twoM2) / ts;
    u += coeff * (stage1[i] - stage3[i]);
  }
  return u;
}

RegimeVerdict assess_regime(const SpinPair& pair, const CycleParams& params) {
  params.validate();
  const Spectrum spectrum(pair);
  const auto s1 = occupation_probabilities(spectrum, params.B1, params.T1, params.J);
  const auto s3 = occupation_probabilities(spectrum, params.B2, params.T2, params.J);
  const auto u1 = occupation_probabilities(spectrum, params.B1, params.T1, 0.0);
  const auto u3 = occupation_probabilities(spectrum, params.B2, params.T2, 0.0);

  RegimeVerdict v;
  v.pwc = pwc_holds(params);
  const auto flags = wcs_predicate(s1, s3);
  v.wcs = flags.wcs;
  v.bcs = flags.bcs;
  const auto maj = majorization_detail(s1, s3);
  v.majorizes = maj.sorted;
  v.majorizesIndexOrder = maj.indexOrder;
  const auto cb = coupling_bounds(pair, params);
  v.Jc = cb.jc;
  v.Jx = cb.jx;
  const auto eb = efficiency_bounds(pair, params);
  v.etaUb = eb.etaUb;
  v.etaMax = eb.etaMax;
  v.etaCarnot = eb.etaCarnot;
  v.L = ground_top_imbalance(u1, u3);
  v.LX = ground_top_imbalance(s1, s3);
  v.secondLawOk = average_cycle_report(s1, s3, params).dS >= 0.0;
  return v;
}

// ---------------------------------------------------------------------------

std::size_t LemmaReport::totalFailures() const {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.failed;
  return n;
}

std::vector<SpinPair> pairs_up_to(int maxTwoS) {
  std::vector<SpinPair> out;
  for (int a = 1; 2 * a <= maxTwoS; ++a)
    for (int b = a; a + b <= maxTwoS; ++b) out.emplace_back(a, b);
  return out;
}

namespace {

enum Assertion { kSignL, kUncoupledWork, kNoEngineBelow, kXAboveY1, kTableCoefficients, kSignChain, kAssertionCount };

struct Outcome {
  enum Status : unsigned char { NotApplicable, Pass, Fail, Skip };
  Status status[kAssertionCount] = {};
  std::vector<LemmaCounterexample> failures;
  bool indefinite = false;
  bool indefiniteEngine = false;
  bool bcs = false;
  bool variantDisagreement = false;
};

std::string describe(std::initializer_list<std::pair<const char*, double>> values) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [k, v] : values) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

Outcome evaluate_point(const Spectrum& spectrum, std::mt19937_64& rng, const CriticalCouplingFn& jcFn) {
  const SpinPair& pair = spectrum.pair();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CycleParams p;
  p.B1 = 0.5 + 7.5 * unit(rng);
  p.B2 = p.B1 * (0.05 + 0.9 * unit(rng));
  p.T1 = std::exp(std::log(0.5) + (std::log(20.0) - std::log(0.5)) * unit(rng));
  p.T2 = p.T1 * (0.1 + 0.8 * unit(rng));
  const double uEngine = unit(rng);
  const double uBelow = unit(rng);
  const double uBeyond = unit(rng);

  Outcome out;
  auto fail = [&](Assertion a, const char* id, const CycleParams& at, std::string detail) {
    out.status[a] = Outcome::Fail;
    out.failures.push_back({id, pair, at, std::move(detail)});
  };

  const double r1 = p.B1 / p.T1;
  const double r2 = p.B2 / p.T2;
  const bool boundary = std::abs(r2 - r1) <= 1e-9 * std::max(r1, r2);
  const bool pwc = pwc_holds(p);

  // Uncoupled medium.
  p.J = 0.0;
  {
    const auto u1 = occupation_probabilities(spectrum, p.B1, p.T1, 0.0);
    const auto u3 = occupation_probabilities(spectrum, p.B2, p.T2, 0.0);
    if (boundary) {
      out.status[kSignL] = Outcome::Skip;
      out.status[kUncoupledWork] = Outcome::Skip;
    } else {
      const double L = ground_top_imbalance(u1, u3);
      if (sign_of(L) == sign_of(r2 - r1)) {
        out.status[kSignL] = Outcome::Pass;
      } else {
        fail(kSignL, "i", p, describe({{"L", L}, {"B2/T2-B1/T1", r2 - r1}}));
      }
      if (pwc) {
        const double v = xy_factors(u1, u3).X;
        if (v > 0.0) {
          out.status[kUncoupledWork] = Outcome::Pass;
        } else {
          fail(kUncoupledWork, "ii", p, describe({{"v", v}}));
        }
      }
    }
  }

  // Coupled medium below the positive work condition: no engine at any J.
  if (!pwc && !boundary) {
    CycleParams q = p;
    q.J = uBelow * p.B1 / (2.0 * pair.twoS());
    const auto s1 = occupation_probabilities(spectrum, q.B1, q.T1, q.J);
    const auto s3 = occupation_probabilities(spectrum, q.B2, q.T2, q.J);
    const auto rep = average_cycle_report(s1, s3, q);
    out.bcs = wcs_predicate(s1, s3).bcs;
    if (rep.X < 0.0 && rep.regime != Regime::Engine) {
      out.status[kNoEngineBelow] = Outcome::Pass;
    } else {
      fail(kNoEngineBelow, "iii", q, describe({{"X", rep.X}, {"W", rep.W}}));
    }
  }

  if (pwc) {
    const double jc = jcFn ? jcFn(pair, p) : coupling_bounds(pair, p).jc;
    CycleParams q = p;
    q.J = uEngine * jc;
    if (q.J > 0.0) {
      const auto s1 = occupation_probabilities(spectrum, q.B1, q.T1, q.J);
      const auto s3 = occupation_probabilities(spectrum, q.B2, q.T2, q.J);
      const auto rep = average_cycle_report(s1, s3, q);
      const auto flags = wcs_predicate(s1, s3);
      out.bcs = out.bcs || flags.bcs;
      const auto maj = majorization_detail(s1, s3);
      out.variantDisagreement = !maj.variantsAgree();

      if (flags.wcs) {
        const double u = x_minus_y1(s1, s3);
        if (u > 0.0 && rep.dS > 0.0) {
          out.status[kXAboveY1] = Outcome::Pass;
        } else {
          fail(kXAboveY1, "iv", q, describe({{"X-Y1", u}, {"dS", rep.dS}, {"X", rep.X}, {"Y", rep.Y}}));
        }
      } else {
        out.status[kXAboveY1] = Outcome::Skip;
      }

      const auto eb = efficiency_bounds(pair, q);
      const bool ok = rep.W > 0.0 && rep.dS > 0.0 && rep.eta && eb.etaUb &&
                      *rep.eta <= *eb.etaUb + 1e-12 && *eb.etaUb < eb.etaCarnot;
      if (ok) {
        out.status[kSignChain] = Outcome::Pass;
      } else {
        fail(kSignChain, "vi", q,
             describe({{"W", rep.W}, {"dS", rep.dS}, {"eta", rep.eta.value_or(NAN)},
                       {"etaUb", eb.etaUb.value_or(NAN)}, {"etaC", eb.etaCarnot}}));
      }
    }

    // Beyond J_c the sign of L_X is open; only record how often W > 0.
    CycleParams z = p;
    const double trueJc = coupling_bounds(pair, p).jc;
    z.J = trueJc * (1.0 + 2.0 * uBeyond);
    if (z.J > 0.0) {
      const auto rep = average_cycle_report(pair, z);
      out.indefinite = true;
      out.indefiniteEngine = rep.regime == Regime::Engine;
    }
  }
  return out;
}

// Coefficient decomposition used in the X > Y1 argument, checked exactly:
// upper half (m1 > 0): m2/s = m5 + m6 with m5 = (2s - 2S)/2 and m5 < s;
// lower half (m1 < 0): |m1|/2 + m2/s = s + m4 with m4 <= 0.
std::pair<std::size_t, std::vector<std::string>> check_table_coefficients(const Spectrum& spectrum) {
  const int ts = spectrum.pair().twoS();
  std::size_t checked = 0;
  std::vector<std::string> bad;
  for (const auto& l : spectrum.levels()) {
    if (l.m1 > 0) {
      ++checked;
      const int twoM5 = ts - l.twoS;
      if (!(twoM5 < ts)) bad.push_back("m5 >= s at k=" + std::to_string(l.k));
    } else if (l.m1 < 0) {
      ++checked;
      // |m|/2*... in integers: |2m| * 2s + 2 * 2m2 <= (2s)^2
      if (!(std::abs(l.twoM) * ts + 2 * l.twoM2 <= ts * ts)) bad.push_back("m4 > 0 at k=" + std::to_string(l.k));
    }
  }
  return {checked, bad};
}

}  // namespace

LemmaReport lemma_suite(const LemmaSuiteConfig& config) {
  if (config.points == 0) throw std::invalid_argument("lemma_suite needs at least one sample point");
  const auto pairs = config.pairs.empty() ? pairs_up_to(9) : config.pairs;
  std::vector<Spectrum> spectra;
  spectra.reserve(pairs.size());
  for (const auto& pr : pairs) spectra.emplace_back(pr);

  LemmaReport report;
  report.seed = config.seed;
  report.points = config.points;
  report.tallies = {
      {"i", "sign(L) = sign(B2/T2 - B1/T1) for the uncoupled medium", 0, 0, 0},
      {"ii", "B2/T2 > B1/T1 implies v > 0 for the uncoupled medium", 0, 0, 0},
      {"iii", "B2 < B1 theta implies X < 0 and no engine, any J", 0, 0, 0},
      {"iv", "worst-case ordering with 0 < J < Jc implies X > Y1 and dS > 0", 0, 0, 0},
      {"v", "m5 < s (upper half) and m4 <= 0 (lower half)", 0, 0, 0},
      {"vi", "0 < J < Jc under PWC implies W > 0, dS > 0, eta <= etaUb < etaC", 0, 0, 0},
  };

  auto keep = [&](LemmaCounterexample c) {
    if (report.counterexamples.size() < config.maxCounterexamplesKept) report.counterexamples.push_back(std::move(c));
  };

  for (const auto& spectrum : spectra) {
    auto [checked, bad] = check_table_coefficients(spectrum);
    auto& t = report.tallies[kTableCoefficients];
    t.checked += checked;
    t.failed += bad.size();
    for (auto& b : bad) keep({"v", spectrum.pair(), {}, b});
  }

  const auto outcomes = parallel_map<Outcome>(config.points, [&](std::size_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    return evaluate_point(spectra[i % spectra.size()], rng, config.criticalCoupling);
  });

  for (const auto& o : outcomes) {
    for (int a = 0; a < kAssertionCount; ++a) {
      auto& t = report.tallies[a];
      switch (o.status[a]) {
        case Outcome::Pass: ++t.checked; break;
        case Outcome::Fail: ++t.checked; ++t.failed; break;
        case Outcome::Skip: ++t.skipped; break;
        case Outcome::NotApplicable: break;
      }
    }
    for (const auto& f : o.failures) keep(f);
    report.indefiniteSamples += o.indefinite;
    report.indefiniteEngines += o.indefiniteEngine;
    report.bcsReached += o.bcs;
    report.majorizationVariantDisagreements += o.variantDisagreement;
  }
  return report;
}

}  // namespace otto
