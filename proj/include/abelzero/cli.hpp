#pragma once

// Command-line front end. Every command prints one JSON document tagged
// "abelzero.<command>/<version>"; tabular and plot data go to CSV files.
//
// The envelope also carries wall-clock timing; results and CSV files are
// deterministic for a fixed seed.
//
// Exit codes: 0 success, 1 domain or numerical error, 2 usage error,
// 3 a corpus run finished with failing rows.

#include <iosfwd>
#include <string>
#include <vector>

#include "abelzero/zeroloci.hpp"

namespace abelzero {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2, kExitFailures = 3 };

/// Schema tag of a command, e.g. "abelzero.zeros/1".
std::string schema_tag(const std::string& command);

/// Parses a corpus description such as
/// {"m":[3,3],"n":[2,2],"height":5,"instances":10,"seed":1,"discs_per_instance":3,
///  "checks":{"bezout":true,"winding":true,"orbit":true,"star":false}}.
/// Missing seed is an error unless `seed_override` is set.
HarnessSpec parse_corpus_spec(const std::string& json_text, const unsigned long long* seed_override);

/// "i,j" with 1-based labels.
SimpleCycle parse_cycle(const std::string& text);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abelzero
