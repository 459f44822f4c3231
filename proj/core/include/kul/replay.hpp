#pragma once

// Self-check harness: recomputes every reference value the library is
// expected to reproduce and compares it exactly against the frozen answer.

#include <string>
#include <vector>

#include "kul/serialize.hpp"

namespace kul {

struct Check {
  std::string id;  // "qds.phi.O_L", "gm3.lattice.10-7-7-2", ...
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::vector<Check> checks;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

/// Runs the checks whose id matches `filter` (ECMAScript regex, searched
/// anywhere in the id); an empty filter runs everything. Throws InputError
/// on an invalid pattern. A check that throws is reported as failed.
VerificationReport verify_reference_values(const std::string& filter = "");

std::vector<std::string> reference_check_ids();

Json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace kul
