#pragma once

#include "cyclocover/fermat.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclocover::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsage = 2, kCapExceeded = 3 };

struct Range {
  int lo = 0;
  int hi = 0;
};

// "A..B" or "A"; throws std::invalid_argument.
Range parse_range(const std::string& text);

const std::vector<std::string>& suite_keys();
const std::vector<std::string>& lattice_keys();

struct VerifySpec {
  Range n{1, 3};
  Range d{2, 5};
  std::vector<std::string> suites;  // empty means all
  std::size_t cap = fermat::kDefaultCap;
  unsigned jobs = 1;
};

// Throws fermat::CapExceeded before any work if a case is above the cap.
Json verify_report(const VerifySpec& spec);
Json ranks_report(Range d, Range n);
Json lattice_report(const std::string& which);

// The report without the "timings" member.
Json checked_payload(const Json& report);

std::string verify_csv(const Json& report);
std::string ranks_csv(const Json& report);
// Inverse of ranks_csv for the "entries" member.
Json ranks_entries_from_csv(const std::string& csv);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclocover::cli
