#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fvs::cli {

/// Process exit codes shared by every command.
enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitError = 2,
};

struct SolveRequest {
  std::string path;
  std::int64_t budget = 0;
  bool stats = false;
  bool audit = false;
  bool no_cutoff = false;
  /// Comma-separated labels that may not be deleted; empty for none.
  std::string forbid;
};

int cmd_solve(const SolveRequest& request, std::ostream& out, std::ostream& err);
int cmd_minimum(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_oracle(const std::string& path, std::ostream& out, std::ostream& err);

struct GenRequest {
  std::string kind;  // "random" or "planted"
  std::int64_t n = 0;
  std::int64_t size = 0;  // edge count for random, budget for planted
  std::uint64_t seed = 0;
  std::string out_path;
};

int cmd_gen(const GenRequest& request, std::ostream& err);

/// Parses "1,2,3". Throws std::invalid_argument on malformed input.
std::vector<std::int32_t> parse_vertex_list(const std::string& text);

}  // namespace fvs::cli
