#pragma once

#include <string>

namespace bohrlab {

/// Entry point behind the bohrlab binary.  Exit codes: 0 success,
/// 2 usage/parse, 3 unsupported query, 4 certification failure or internal
/// inconsistency.
int run_cli(int argc, const char* const* argv);

/// 12-significant-digit decimal (default) or full round-trip precision.
std::string format_sig(double x, bool full_precision = false);

/// Double carrying exactly the 12-significant-digit decimal value, so JSON
/// serialization reproduces the table output byte for byte.
double round_sig12(double x);

} // namespace bohrlab
