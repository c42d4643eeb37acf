#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace mcf::cli {

enum class Command {
  expand,
  convergents,
  evaluate,
  count,
  enumerate,
  count_circular,
  count_mixed,
  count_degree_m,
  identities,
};

enum class Format { text, json };

/// One CLI invocation. Exactly one input source: the inline lists (a/b/c,
/// values, bounds) or input_path pointing at a JSON document.
struct JobSpec {
  Command command = Command::count;
  std::optional<std::string> input_path;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::optional<std::string> c;
  std::optional<std::string> values;
  std::optional<std::string> bounds;  // rows separated by ';'
  std::optional<std::size_t> degree;
  std::optional<std::size_t> n;
  std::size_t max_steps = 30;
  std::optional<double> zero_tol;
  bool use_float = false;
  Format format = Format::text;
  std::string mode;  // count: A|B|C, enumerate: plain|B|circular|mixed, convergents: matrix|tail|head
  std::string check = "factorial";
  std::string wrap_bar = "0";
  bool all = false;
  bool classical = false;
  bool oracle = false;
  std::optional<std::uint64_t> budget;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exit codes of run() and main_entry().
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Executes a parsed job, writing results to `out` and diagnostics to `err`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs the job.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcf::cli
