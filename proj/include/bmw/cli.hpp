#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace bmw::cli {

enum ExitCode : int { kOk = 0, kNotCertified = 1, kUsage = 2, kResource = 3 };

/// Runs one command line (without the program name). Documents go to `out`,
/// diagnostics and the effective seed to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bmw::cli
