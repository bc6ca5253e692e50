#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "seqwht/filter_spec.hpp"

namespace seqwht::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kIo = 3,
};

/// Parses "N", "N/4", "3N/4", "3N", or a plain integer against N = `size`.
std::uint64_t parse_cutoff(const std::string& text, std::uint64_t size);

/// Builds a spec from --kind and --cutoff / --band "L:H".
FilterSpec parse_filter_spec(const std::string& kind, const std::string& cutoff,
                             const std::string& band, std::uint64_t size);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqwht::cli
