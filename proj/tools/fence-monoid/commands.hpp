#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fencemonoid/enumerate.hpp"
#include "fencemonoid/greens.hpp"

namespace fencemonoid::cli {

using Json = nlohmann::ordered_json;

enum class Status { Ok, Violation, Error };
enum class Format { Text, Json, Csv };

std::string_view to_string(Status s);

// 0 ok, 2 violation of a checked claim, 1 usage or resource error.
int exit_code(Status s);

struct CommandResult {
  std::string command;
  int n = 0;
  Json params = Json::object();
  Json result = Json::object();
  Status status = Status::Ok;
  // Human-readable rendering; also the output used when no CSV table exists.
  std::string text;
  // Header plus rows, for tabular results only.
  std::string csv;
  double timing_ms = 0;
};

// JSON: {command, n, params, result, status, timing_ms, version}. Only
// timing_ms varies between identical runs; text and CSV carry no timing.
std::string render(const CommandResult& r, Format f);

struct Common {
  unsigned threads = 1;
  std::filesystem::path cache_dir = ".fence-cache";
  bool use_cache = true;
  bool huge = false;  // allow n = 9, 10
};

// Largest n accepted without --huge.
inline constexpr int kDefaultGuard = 8;

struct EnumerateArgs {
  int n = 0;
  Kind which = Kind::IF;
  bool list = false;
  std::optional<std::string> contains;
  std::optional<std::filesystem::path> export_to;
  std::optional<std::filesystem::path> import_from;
};

CommandResult cmd_enumerate(const EnumerateArgs& args, const Common& common);

struct GreensArgs {
  int n = 0;
  std::vector<std::string> elements;
  bool all = false;
  Relation relation = Relation::J;
  bool witness = false;
  bool classes = false;
};

CommandResult cmd_greens(const GreensArgs& args, const Common& common);

struct FactorizeArgs {
  int n = 0;
  std::string element;
  bool target_g = false;
  bool verify = false;
};

CommandResult cmd_factorize(const FactorizeArgs& args, const Common& common);

enum class Claim { Thm1, Thm2, Least, Rank, OddNeg, JCrit, Regular };

Claim parse_claim(std::string_view text);
std::string_view to_string(Claim c);

CommandResult cmd_verify(int n, Claim claim, const Common& common);

// Builds or loads IF/PFI/I tables, honouring the cache and size guard.
SemigroupTable load_table(int n, Kind which, const Common& common);

// Error result carrying the library's error code.
CommandResult error_result(std::string command, int n, const std::exception& e);

}  // namespace fencemonoid::cli
