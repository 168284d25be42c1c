#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace semiloop::tool {

struct VerifyLine {
  int tier = 1;
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

/// Worked-example regression suite. Tier 1 runs the order-15 loop and the
/// counting formulas; tier 2 adds the order-80 and order-624 loops and the
/// orbit table.
std::vector<VerifyLine> run_verify(int tier, std::uint64_t seed);

}  // namespace semiloop::tool
