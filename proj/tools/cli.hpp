#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hallfrac::cli {

enum class Format { Plain, Csv, Json };

enum class Subcommand { Farey, Classify, Dual, Class, Theorem, Table, Occupation, Entropy, Curve };

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Parsed command line. Fraction-valued arguments are kept as text and
/// parsed when the command runs.
struct CommandRequest {
  Subcommand subcommand = Subcommand::Farey;
  Format format = Format::Plain;
  int precision = 12;  ///< significant digits for reals

  std::uint32_t order = 6;
  std::uint64_t rows = 18;
  std::uint64_t count = 11;
  std::string value;  ///< positional p/q for classify, dual, class
  bool as_label = false;
  bool verify = false;

  std::string h;  ///< p/q or real
  std::optional<double> xi;
  std::optional<double> n;
  double boltzmann = 1.0;
  std::optional<std::string> grid;  ///< "xmin:xmax:steps"
  bool log_grid = false;

  std::string generator = "koch";
  int level = 6;
  std::optional<double> dimension;
  bool estimate = false;
  int k_first = 1;
  int k_last = 6;
};

/// Text form of a real with `digits` significant digits (printf %g rules,
/// ties to even on the exact binary value).
std::string format_real(double value, int digits);

/// Parses argv-style arguments (without the program name). Throws
/// CLI::ParseError subclasses on usage errors, including --help.
CommandRequest parse_request(const std::vector<std::string>& args);

/// Executes a validated request. Returns kOk, or kDomainError after writing
/// a one-line diagnostic to `err`.
int execute(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// parse_request + execute with exit-code mapping: usage errors return
/// kUsageError, --help prints usage and returns kOk.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hallfrac::cli
