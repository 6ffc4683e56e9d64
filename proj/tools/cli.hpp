#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rlpc::cli {

enum class Subcommand { Huffman, Reserved, GLengths, Quasi, Encode, Decode, Bench, Table1 };

struct CommandSpec {
  Subcommand subcommand = Subcommand::Huffman;
  std::string dist;  // "zipf:N" or "benford"
  std::string pmf_path;
  std::string input_path;
  std::string out_path;
  std::string labels_path;
  std::string grid_csv_path;
  std::vector<unsigned> lambda;
  std::optional<std::size_t> g;
  std::string phi = "identity";
  bool json = false;
  bool csv = false;
  int digits = 6;
  std::size_t count = 1'000'000;
  std::size_t repeats = 5;
  std::uint64_t seed = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitModuleError = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;      // written to --out or stdout
  std::string diagnostic;  // one line for stderr on failure
};

// Throws CodingError(UsageError) on malformed arguments; `--help` yields a
// result whose output is the help text.
std::variant<CommandSpec, CommandResult> parse_command_line(const std::vector<std::string>& args);

CommandResult run(const CommandSpec& spec);

// Full pipeline used by main(): parse, run, write output; returns the exit code.
int main_with_args(const std::vector<std::string>& args);

}  // namespace rlpc::cli
