#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cli/errors.hpp"
#include "cli/figures.hpp"
#include "cli/spin_parse.hpp"
#include "otto/coc.hpp"
#include "otto/ensemble.hpp"
#include "otto/oracle.hpp"
#include "otto/parallel.hpp"

namespace otto::cli {

namespace {

std::string flag01(bool b) { return b ? "1" : "0"; }

std::string pair_line(const SpinPair& p) {
  return "pair s1=" + spin_label(p.twoS1()) + " s2=" + spin_label(p.twoS2());
}

std::string params_line(const CycleParams& c) {
  return "B1=" + format_number(c.B1) + " B2=" + format_number(c.B2) + " T1=" + format_number(c.T1) +
         " T2=" + format_number(c.T2);
}

void emit(const CsvDocument& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    write_csv(out, doc);
    return;
  }
  const std::string text = to_csv_string(doc);
  {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
  }
  std::ifstream back(path, std::ios::binary);
  const auto reread = read_csv(back);
  if (reread.header != doc.header || reread.rows != doc.rows || reread.metadata != doc.metadata)
    throw std::runtime_error("round-trip check failed for '" + path + "'");
}

}  // namespace

const std::vector<std::string>& cycle_columns() {
  static const std::vector<std::string> cols = {"J",    "X",    "Y",         "Q1", "Q2",     "W",   "eta",
                                                "eta0", "etaUb", "etaCarnot", "dS", "regime", "wcs", "majorizes"};
  return cols;
}

std::vector<double> linear_grid(double start, double stop, int steps) {
  if (steps < 1) throw UsageError("empty J grid (steps must be >= 1)");
  if (!std::isfinite(start) || !std::isfinite(stop) || stop < start)
    throw UsageError("J grid needs finite start <= stop");
  std::vector<double> g(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    g[static_cast<std::size_t>(i)] = steps == 1 ? start : start + (stop - start) * i / (steps - 1);
  if (steps > 1) g.back() = stop;
  return g;
}

CsvDocument cycle_table(const SpinPair& pair, const CycleParams& base, const std::vector<double>& js,
                        std::vector<std::string> metadata) {
  base.validate();
  for (double j : js) {
    CycleParams p = base;
    p.J = j;
    p.validate();
  }
  const Spectrum spectrum(pair);
  CsvDocument doc;
  doc.metadata = std::move(metadata);
  doc.header = cycle_columns();
  doc.rows = parallel_map<std::vector<std::string>>(js.size(), [&](std::size_t i) {
    CycleParams p = base;
    p.J = js[i];
    const auto s1 = occupation_probabilities(spectrum, p.B1, p.T1, p.J);
    const auto s3 = occupation_probabilities(spectrum, p.B2, p.T2, p.J);
    const auto r = average_cycle_report(s1, s3, p);
    const auto eb = efficiency_bounds(pair, p);
    const auto flags = wcs_predicate(s1, s3);
    return std::vector<std::string>{format_number(p.J),   format_number(r.X),    format_number(r.Y),
                                    format_number(r.Q1),  format_number(r.Q2),   format_number(r.W),
                                    format_number(r.eta), format_number(r.eta0), format_number(eb.etaUb),
                                    format_number(eb.etaCarnot), format_number(r.dS), std::string(to_string(r.regime)),
                                    flag01(flags.wcs),    flag01(majorization_check(s1, s3))};
  });
  return doc;
}

CsvDocument spectrum_table(const SpinPair& pair, double B, double J, bool sorted) {
  const Spectrum sp(pair);
  const auto energies = sp.energies(B, J);
  for (const auto& l : sp.levels()) (void)energy_of_level(l, B, J);  // validates B, J
  std::vector<int> order;
  if (sorted) {
    order = sp.energyOrder(B, J);
  } else {
    for (std::size_t i = 0; i < sp.size(); ++i) order.push_back(static_cast<int>(i) + 1);
  }
  CsvDocument doc;
  doc.header = {"k", "2S", "2m", "m1", "2m2", "E"};
  for (int k : order) {
    const auto& l = sp[static_cast<std::size_t>(k - 1)];
    doc.rows.push_back({std::to_string(l.k), std::to_string(l.twoS), std::to_string(l.twoM), std::to_string(l.m1),
                        std::to_string(l.twoM2), format_number(energies[static_cast<std::size_t>(k - 1)])});
  }
  return doc;
}

CsvDocument coc_table(const SpinPair& pair, const CycleParams& params, CocSummary* summary) {
  params.validate();
  const Spectrum sp(pair);
  const auto records = enumerate_cocs(sp, params);
  CsvDocument doc;
  doc.header = {"initialK", "finalK", "x", "y", "Q1", "Q2", "W", "dS", "class", "efficiency"};
  for (const auto& r : records) {
    doc.rows.push_back({std::to_string(r.initialK), std::to_string(r.finalK), std::to_string(r.x),
                        format_number(r.y()), format_number(r.q1), format_number(r.q2), format_number(r.w),
                        format_number(r.dS), std::string(to_string(r.caseClass)), format_number(r.efficiency)});
  }

  CocSummary s;
  const auto cb = coupling_bounds(pair, params);
  s.jx = cb.jx;
  s.jc = cb.jc;
  s.etaMaxClosedForm = efficiency_bounds(pair, params).etaMax;
  try {
    const auto m = max_engine_coc_efficiency(sp, params);
    s.etaMaxObserved = m.etaMaxObserved;
    doc.metadata.push_back("witness=" + std::to_string(m.witness.initialK) + "->" + std::to_string(m.witness.finalK) +
                           " x=" + std::to_string(m.witness.x) + " y=" + format_number(m.witness.y()));
  } catch (const std::domain_error&) {
    doc.metadata.push_back("witness=none (coupling outside the closed-form range)");
  }
  const auto audit = second_law_audit(sp, params);
  s.engineViolations = audit.engineViolations;
  s.secondLawApplicable = audit.applicable;

  doc.metadata.push_back("Jx=" + format_number(s.jx));
  doc.metadata.push_back("Jc=" + format_number(s.jc));
  doc.metadata.push_back("etaMaxObserved=" + format_number(s.etaMaxObserved));
  doc.metadata.push_back("etaMaxClosedForm=" + format_number(s.etaMaxClosedForm));
  doc.metadata.push_back("secondLawApplicable=" + flag01(s.secondLawApplicable));
  doc.metadata.push_back("violations=" + std::to_string(s.engineViolations));
  if (summary) *summary = s;
  return doc;
}

int run_verify(const VerifyOptions& options, std::ostream& out) {
  const auto pairs = pairs_up_to(options.maxTwoS);
  std::size_t failures = 0;
  out << "# otto " << kToolVersion << " verify\n";
  out << "seed=" << options.seed << "\n";
  out << "points=" << options.points << "\n";
  out << "pairs=" << pairs.size() << "\n";

  // Oracle: analytic spectrum and partition function against dense
  // diagonalisation, and the work identity against a trace formula.
  struct Probe {
    double B, T, J;
  };
  static constexpr Probe probes[] = {{4.0, 4.0, 0.2}, {1.5, 0.7, 0.05}, {0.3, 2.0, 0.7}, {3.0, 0.25, 0.0}};
  struct OracleRow {
    double spectrumDev = 0.0;
    double logZDev = 0.0;
    double traceDev = 0.0;
  };
  const auto oracleRows = parallel_map<OracleRow>(pairs.size(), [&](std::size_t i) {
    OracleRow row;
    const Spectrum sp(pairs[i]);
    for (const auto& pr : probes) {
      row.spectrumDev = std::max(row.spectrumDev, compare_with_analytic(pairs[i], pr.B, pr.J));
      const double a = partition_function(sp, pr.B, pr.T, pr.J);
      const double o = oracle_log_partition(pairs[i], pr.B, pr.T, pr.J);
      row.logZDev = std::max(row.logZDev, std::abs(std::expm1(a - o)));
    }
    CycleParams c{4.0, 3.0, 4.0, 2.0, 0.0};
    c.J = 0.5 * coupling_bounds(pairs[i], c).jc;
    row.traceDev = trace_work_deviation(pairs[i], c);
    return row;
  });
  OracleRow worst;
  for (const auto& r : oracleRows) {
    worst.spectrumDev = std::max(worst.spectrumDev, r.spectrumDev);
    worst.logZDev = std::max(worst.logZDev, r.logZDev);
    worst.traceDev = std::max(worst.traceDev, r.traceDev);
  }
  constexpr double kOracleTol = 1e-9;
  const auto oracleLine = [&](const char* name, double dev) {
    const bool ok = dev < kOracleTol;
    if (!ok) ++failures;
    out << "oracle " << name << " max_deviation=" << format_number(dev) << " tolerance=" << format_number(kOracleTol)
        << " status=" << (ok ? "ok" : "FAIL") << "\n";
  };
  oracleLine("spectrum", worst.spectrumDev);
  oracleLine("partition_relative", worst.logZDev);
  oracleLine("trace_work", worst.traceDev);

  LemmaSuiteConfig cfg;
  cfg.pairs = pairs;
  cfg.points = options.points;
  cfg.seed = options.seed;
  cfg.criticalCoupling = options.criticalCoupling;
  const auto report = lemma_suite(cfg);
  for (const auto& t : report.tallies) {
    out << "assertion " << t.id << " checked=" << t.checked << " failed=" << t.failed << " skipped=" << t.skipped
        << " # " << t.description << "\n";
  }
  out << "info indefinite_samples=" << report.indefiniteSamples
      << " indefinite_engines=" << report.indefiniteEngines << " bcs_reached=" << report.bcsReached
      << " majorization_variant_disagreements=" << report.majorizationVariantDisagreements << "\n";
  failures += report.totalFailures();
  out << "counterexamples=" << report.totalFailures() << "\n";
  for (const auto& c : report.counterexamples) {
    out << "counterexample assertion=" << c.assertion << " s1=" << spin_label(c.pair.twoS1())
        << " s2=" << spin_label(c.pair.twoS2()) << " " << params_line(c.params) << " J=" << format_number(c.params.J)
        << " " << c.detail << "\n";
  }
  out << "result=" << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return failures == 0 ? kOk : kVerificationFailure;
}

namespace {

/// Reads key=value lines and appends "--key value" for every key not given on
/// the command line.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::set<std::string> given;
  for (const auto& a : args) {
    if (a.rfind("--", 0) != 0) continue;
    given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
  }
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineNo) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key.empty()) throw UsageError(path + ":" + std::to_string(lineNo) + ": empty key");
    if (given.count(key)) continue;
    if (value == "true") {
      args.push_back("--" + key);
    } else if (value != "false") {
      args.push_back("--" + key);
      args.push_back(value);
    }
  }
  return args;
}

struct PairFlags {
  std::string s1 = "1/2";
  std::string s2 = "1";
  SpinPair pair() const { return SpinPair(parse_spin(s1), parse_spin(s2)); }
};

void add_pair_flags(CLI::App& app, PairFlags& f) {
  app.add_option("--s1", f.s1, "first spin, e.g. 1/2 or 1.5")->capture_default_str();
  app.add_option("--s2", f.s2, "second spin")->capture_default_str();
}

void add_cycle_flags(CLI::App& app, CycleParams& c) {
  app.add_option("--B1", c.B1, "field at the hot bath")->capture_default_str();
  app.add_option("--B2", c.B2, "field at the cold bath")->capture_default_str();
  app.add_option("--T1", c.T1, "hot bath temperature")->capture_default_str();
  app.add_option("--T2", c.T2, "cold bath temperature")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& rawArgs, std::ostream& out, std::ostream& err) {
  CLI::App app{"Otto cycle with two exchange-coupled spins", "otto"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  std::string configHelp;
  app.add_option("--config", configHelp, "key=value file; command-line flags take precedence");

  PairFlags pf;
  CycleParams cp{4.0, 3.0, 4.0, 2.0, 0.0};
  std::string output;
  std::uint64_t seed = 0;

  auto* spectrum = app.add_subcommand("spectrum", "levels and energies of one pair");
  double specB = 0.0, specJ = 0.0;
  bool sorted = false;
  std::string crossing;
  add_pair_flags(*spectrum, pf);
  spectrum->add_option("--B", specB, "field")->capture_default_str();
  spectrum->add_option("--J", specJ, "coupling")->capture_default_str();
  spectrum->add_flag("--sorted", sorted, "order rows by energy");
  spectrum->add_option("--check-crossing", crossing, "second field, as <v> or B2=<v>");
  spectrum->add_option("--output,-o", output, "CSV file (default stdout)");

  auto* cycle = app.add_subcommand("cycle", "one averaged cycle");
  add_pair_flags(*cycle, pf);
  add_cycle_flags(*cycle, cp);
  cycle->add_option("--J", cp.J, "coupling")->capture_default_str();
  cycle->add_option("--output,-o", output, "CSV file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "averaged cycle over a J grid");
  double jStart = 0.0;
  std::optional<double> jStop;
  int jSteps = 51;
  add_pair_flags(*sweep, pf);
  add_cycle_flags(*sweep, cp);
  sweep->add_option("--J-start", jStart, "first J")->capture_default_str();
  sweep->add_option("--J-stop", jStop, "last J (default J_c)");
  sweep->add_option("--J-steps", jSteps, "grid points")->capture_default_str();
  sweep->add_option("--seed", seed, "echoed in the metadata")->capture_default_str();
  sweep->add_option("--output,-o", output, "CSV file (default stdout)");

  auto* coc = app.add_subcommand("coc", "complete Otto cycle audit");
  add_pair_flags(*coc, pf);
  add_cycle_flags(*coc, cp);
  coc->add_option("--J", cp.J, "coupling")->capture_default_str();
  coc->add_option("--output,-o", output, "CSV file (default stdout)");

  auto* verify = app.add_subcommand("verify", "oracle comparisons and lemma suite");
  VerifyOptions vo;
  verify->add_option("--seed", vo.seed, "RNG seed")->capture_default_str();
  verify->add_option("--points", vo.points, "lemma suite samples")->capture_default_str();
  verify->add_option("--max-two-s", vo.maxTwoS, "largest 2(s1+s2)")->capture_default_str()->check(CLI::Range(2, 40));

  auto* figures = app.add_subcommand("figures", "write the preset datasets as CSV");
  std::string dir = ".";
  int figSteps = 101;
  figures->add_option("--output-dir", dir, "target directory")->capture_default_str();
  figures->add_option("--J-steps", figSteps, "points per curve")->capture_default_str();

  try {
    auto args = merge_config(rawArgs);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*spectrum) {
      const auto pair = pf.pair();
      auto doc = spectrum_table(pair, specB, specJ, sorted);
      doc.metadata = {"otto " + std::string(kToolVersion) + " spectrum", pair_line(pair),
                      "B=" + format_number(specB) + " J=" + format_number(specJ) + " sorted=" + flag01(sorted)};
      int code = kOk;
      if (!crossing.empty()) {
        const std::string v = crossing.rfind("B2=", 0) == 0 ? crossing.substr(3) : crossing;
        const double b2 = parse_number(v);
        const bool same = check_no_level_crossing(Spectrum(pair), specB, b2, specJ);
        doc.metadata.push_back("check-crossing B2=" + format_number(b2) + ": " + (same ? "no crossing" : "CROSSING"));
        if (!same) {
          err << "CROSSING\n";
          code = kDomainWarning;
        }
      }
      emit(doc, output, out);
      return code;
    }
    if (*cycle || *sweep) {
      const auto pair = pf.pair();
      cp.validate();
      const auto cb = coupling_bounds(pair, cp);
      std::vector<double> js;
      std::vector<std::string> meta = {"otto " + std::string(kToolVersion) + (*cycle ? " cycle" : " sweep"),
                                       pair_line(pair), params_line(cp)};
      if (*cycle) {
        js = {cp.J};
        meta.push_back("J=" + format_number(cp.J));
      } else {
        double stop = 0.0;
        if (jStop) {
          stop = *jStop;
        } else if (cb.engineRegime) {
          stop = cb.jc;
        } else {
          throw UsageError("--J-stop is required when B2/T2 <= B1/T1");
        }
        js = linear_grid(jStart, stop, jSteps);
        meta.push_back("J_start=" + format_number(jStart) + " J_stop=" + format_number(stop) +
                       " J_steps=" + std::to_string(jSteps));
        meta.push_back("seed=" + std::to_string(seed));
      }
      meta.push_back("Jc=" + format_number(cb.jc) + " Jx=" + format_number(cb.jx));
      emit(cycle_table(pair, cp, js, std::move(meta)), output, out);
      return kOk;
    }
    if (*coc) {
      const auto pair = pf.pair();
      CocSummary s;
      auto doc = coc_table(pair, cp, &s);
      doc.metadata.insert(doc.metadata.begin(), {"otto " + std::string(kToolVersion) + " coc", pair_line(pair),
                                                 params_line(cp) + " J=" + format_number(cp.J)});
      emit(doc, output, out);
      return s.engineViolations > 0 && s.secondLawApplicable ? kVerificationFailure : kOk;
    }
    if (*verify) return run_verify(vo, out);
    if (*figures) {
      write_figures(dir, figSteps);
      out << "wrote fig2 fig3 fig5 fig6a fig6b fig7 to " << dir << "\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "warning: " << e.what() << "\n";
    return kDomainWarning;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace otto::cli
