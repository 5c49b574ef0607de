#pragma once

#include "gfano/rational.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfano::cli {

enum class Command { Verify, Series, Tables, Sweep, Families };

struct RunConfig {
  Command command = Command::Verify;
  std::string family = "ALL";
  int order = 60;
  std::optional<Rational> s;
  std::optional<Rational> c;
  std::string kind = "iseries";
  long sweep_first = 0;
  long sweep_last = 3;
  bool json = false;
  std::string out_path;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exit codes: 0 all PASS, 1 some FAIL, 2 configuration error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Configuration problems exit with 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gfano::cli
