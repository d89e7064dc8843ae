#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gpea/element_set.hpp"
#include "gpea/finite_gpea.hpp"

namespace gpea {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidModel = 2;
inline constexpr int kExitLawFailure = 3;

/// Set specs: "list:i,j,...", "labels:a,b,...", "center", "atoms", "all",
/// "pea-class:commutative", "pea-class:boolean". Throws UsageError.
ElementSet parse_set_spec(const FiniteGpea& e, const std::string& spec);

/// Runs one command line (args excludes the program name) and returns the
/// exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpea
