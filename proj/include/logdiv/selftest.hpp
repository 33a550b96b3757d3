#pragma once

#include <string>
#include <vector>

namespace logdiv {

struct SelftestCase {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Fault injections understood by the golden suite.
enum class SelftestFault { None, EtaSign };

/// Runs every golden case; a case that throws is reported as failed.
std::vector<SelftestCase> run_selftest(SelftestFault fault = SelftestFault::None);

}  // namespace logdiv
