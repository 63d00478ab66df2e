#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "flagheight/arith.hpp"
#include "flagheight/weyl.hpp"

namespace flagheight::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kMathInput = 3,
  kSizeCap = 4,
  kCrossCheck = 5,
};

enum class Command { height, jantzen_rhs, character, dim, bwb, scan };
enum class Method { all, substitution, fixed_point, harmo_bott };
enum class Output { json, csv, text };

struct JobSpec {
  Command command = Command::height;
  std::string group;
  std::vector<std::size_t> theta;  // 1-based
  std::vector<long> lambda;
  Method method = Method::all;
  Output output = Output::json;
  std::optional<std::vector<Rational>> y;
  std::uint64_t cap = kDefaultWeylCap;
  std::optional<std::filesystem::path> cache_dir;
  bool check_conjecture = false;
};

/// Runs one job; the document goes to `out`, diagnostics to `err`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Parses argv (including the program name) and runs the job.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Simple-root numbering per family, plus a per-index listing for `group` if given.
std::string numbering_table(const std::optional<std::string>& group);

std::vector<long> parse_int_list(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace flagheight::cli
