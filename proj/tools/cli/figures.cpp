#include "cli/figures.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "cli/commands.hpp"
#include "cli/errors.hpp"
#include "cli/spin_parse.hpp"
#include "otto/ensemble.hpp"
#include "otto/otto_cycle.hpp"
#include "otto/regime.hpp"

namespace otto::cli {

namespace {

constexpr double kB1 = 4.0;
constexpr double kB2 = 3.0;

std::vector<std::string> preset_meta(const std::string& name, const std::string& what) {
  return {"otto " + std::string(kToolVersion) + " figures " + name, what, "B1=4 B2=3"};
}

/// P_k - P'_k for k = 2..6 and the tail sums from k to 6, for (1/2, 1).
void population_rows(double t1, double t2, int steps, CsvDocument& diffs, CsvDocument& tails) {
  const SpinPair pair(1, 2);
  const Spectrum sp(pair);
  CycleParams c{kB1, kB2, t1, t2, 0.0};
  const double jc = coupling_bounds(pair, c).jc;
  for (double j : linear_grid(0.0, jc, steps)) {
    const auto p = occupation_probabilities(sp, kB1, t1, j);
    const auto q = occupation_probabilities(sp, kB2, t2, j);
    std::vector<std::string> d = {format_number(t1), format_number(t2), format_number(j)};
    std::vector<std::string> t = d;
    for (std::size_t k = 1; k < 6; ++k) d.push_back(format_number(p[k] - q[k]));
    double tail = 0.0;
    std::vector<std::string> sums;
    for (std::size_t k = 5; k >= 1; --k) {
      tail += p[k] - q[k];
      sums.push_back(format_number(tail));
    }
    t.insert(t.end(), sums.begin(), sums.end());
    diffs.rows.push_back(std::move(d));
    tails.rows.push_back(std::move(t));
  }
}

struct Curve {
  SpinPair pair;
  double t1, t2, jStop;
};

CsvDocument cycle_curves(const std::string& name, const std::string& what, const std::vector<Curve>& curves,
                         int steps) {
  CsvDocument doc;
  doc.metadata = preset_meta(name, what);
  doc.header = {"s1", "s2", "T1", "T2", "J", "W", "Q1", "eta", "eta0", "etaUb", "etaCarnot", "Jc"};
  for (const auto& cv : curves) {
    CycleParams base{kB1, kB2, cv.t1, cv.t2, 0.0};
    const double jc = coupling_bounds(cv.pair, base).jc;
    const double stop = cv.jStop > 0.0 ? cv.jStop : jc;
    for (double j : linear_grid(0.0, stop, steps)) {
      CycleParams p = base;
      p.J = j;
      const auto r = average_cycle_report(cv.pair, p);
      const auto eb = efficiency_bounds(cv.pair, p);
      doc.rows.push_back({spin_label(cv.pair.twoS1()), spin_label(cv.pair.twoS2()), format_number(cv.t1),
                          format_number(cv.t2), format_number(j), format_number(r.W), format_number(r.Q1),
                          format_number(r.eta), format_number(r.eta0), format_number(eb.etaUb),
                          format_number(eb.etaCarnot), format_number(jc)});
    }
  }
  return doc;
}

}  // namespace

std::vector<FigureDataset> figure_datasets(int jSteps) {
  if (jSteps < 2) throw UsageError("figures need at least 2 J points per curve");
  std::vector<FigureDataset> out;

  CsvDocument fig2, fig3;
  fig2.metadata = preset_meta("fig2", "pair s1=1/2 s2=1; P_k - P'_k, k=2..6; J from 0 to J_c");
  fig3.metadata = preset_meta("fig3", "pair s1=1/2 s2=1; tail sums of P_k - P'_k from k to 6");
  fig2.header = {"T1", "T2", "J", "d2", "d3", "d4", "d5", "d6"};
  fig3.header = {"T1", "T2", "J", "S6", "S5_6", "S4_6", "S3_6", "S2_6"};
  population_rows(4.0, 2.0, jSteps, fig2, fig3);
  population_rows(6.0, 3.0, jSteps, fig2, fig3);
  out.push_back({"fig2", std::move(fig2)});
  out.push_back({"fig3", std::move(fig3)});

  out.push_back({"fig5", cycle_curves("fig5", "efficiency and upper bound, T1=1 T2=0.5, J from 0 to J_c",
                                      {{SpinPair(1, 2), 1.0, 0.5, 0.0},
                                       {SpinPair(1, 3), 1.0, 0.5, 0.0},
                                       {SpinPair(1, 4), 1.0, 0.5, 0.0}},
                                      jSteps)});

  const auto workPairs = [](double t1, double t2) {
    std::vector<Curve> v;
    for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}})
      v.push_back({SpinPair(a, b), t1, t2, 1.0});
    return v;
  };
  out.push_back({"fig6a", cycle_curves("fig6a", "work against J, T1=1 T2=0.5", workPairs(1.0, 0.5), jSteps)});
  out.push_back({"fig6b", cycle_curves("fig6b", "work against J, T1=6 T2=3", workPairs(6.0, 3.0), jSteps)});

  out.push_back({"fig7", cycle_curves("fig7", "fixed s=7/2, T1=4 T2=2, J from 0 to J_c",
                                      {{SpinPair(1, 6), 4.0, 2.0, 0.0},
                                       {SpinPair(2, 5), 4.0, 2.0, 0.0},
                                       {SpinPair(3, 4), 4.0, 2.0, 0.0}},
                                      jSteps)});
  return out;
}

void write_figures(const std::string& dir, int jSteps) {
  std::filesystem::create_directories(dir);
  for (const auto& f : figure_datasets(jSteps)) {
    const auto path = (std::filesystem::path(dir) / (f.name + ".csv")).string();
    {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw UsageError("cannot write '" + path + "'");
      write_csv(out, f.doc);
    }
    std::ifstream back(path, std::ios::binary);
    const auto reread = read_csv(back);
    if (reread.rows != f.doc.rows || reread.header != f.doc.header)
      throw std::runtime_error("round-trip check failed for '" + path + "'");
  }
}

}  // namespace otto::cli
