#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

namespace pealab::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,      // parse, usage or IO failure
  kAxiomViolation = 2,  // input parsed but is not a valid structure
  kDomainError = 3,     // any other library error
};

/// Runs one command line. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "fnv1a64:" followed by 16 hex digits.
std::string input_hash(std::string_view content);

std::string_view version();

}  // namespace pealab::cli
