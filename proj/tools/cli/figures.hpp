#pragma once

#include <string>
#include <vector>

#include "cli/csv.hpp"

namespace otto::cli {

struct FigureDataset {
  std::string name;  ///< file stem, e.g. "fig2"
  CsvDocument doc;
};

/// Built-in presets: population differences and their tail sums for (1/2,1),
/// efficiency and bound curves, work curves at two bath temperatures, and the
/// fixed-s comparison. `jSteps` points per curve.
std::vector<FigureDataset> figure_datasets(int jSteps = 101);

/// Writes <dir>/<name>.csv for every dataset and re-reads each file.
void write_figures(const std::string& dir, int jSteps = 101);

}  // namespace otto::cli
