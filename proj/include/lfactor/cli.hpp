#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace lfac {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInput = 2, kExitGuard = 3 };

enum class OutputMode { Text, Structured };

struct JobSpec {
  std::string group;
  std::string rep;
  std::string character = "generic";
  OutputMode output = OutputMode::Text;
  std::uint64_t max_weyl = 1000000;
  std::int64_t max_dim = 10000000;
};

// Each command writes to `out` only on success; diagnostics go to `err`.
int cmd_compute(const JobSpec& spec, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& suite, std::ostream& out, std::ostream& err);
int cmd_table1(int max_rank, std::ostream& out, std::ostream& err);
int cmd_datum(const std::string& path, std::uint64_t max_weyl, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lfac
