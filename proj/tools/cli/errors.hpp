#pragma once

#include <stdexcept>
#include <string>

namespace otto::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsageError = 2, kDomainWarning = 3 };

/// Bad flags, unparsable values, empty grids.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace otto::cli
