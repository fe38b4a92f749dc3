#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tdpt::cli {

struct OracleCheck {
  std::string name;
  bool passed;
  std::string detail;
};

/// Identity checks exercised by the `oracle` subcommand, limited to orders m <= max_m.
std::vector<OracleCheck> run_oracle_suite(std::size_t max_m);

}  // namespace tdpt::cli
