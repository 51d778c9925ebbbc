#pragma once

#include <string>
#include <string_view>

namespace otto::cli {

/// "3/2", "1.5" or "2" to the doubled integer 2s. Only positive
/// half-integers are accepted; anything else throws UsageError.
int parse_spin(std::string_view text);

/// 2s rendered as "1/2", "1", "3/2", ...
std::string spin_label(int twoS);

}  // namespace otto::cli
