#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "fencemonoid/enumerate.hpp"

namespace fencemonoid {

// Plain-text table format:
//
//   FENCEMONOID v1 n=<n> kind=<kind> count=<count>
//   n=<n>:[...]            one element per line, canonical order
//
// `kind` is a single token: I, PFI, IF, or closure-<digest>.
void write_table(std::ostream& out, const SemigroupTable& table, std::string_view kind);

struct StoredTable {
  SemigroupTable table;
  std::string kind;
};

// Throws Parse on a malformed header, a count mismatch, or a bad element.
StoredTable read_table(std::istream& in);

// Stable digest of a generator set, for closure cache keys.
std::string generators_digest(std::span<const PartialInjection> gens);

// Reads <dir>/<kind>-n<n>.fm if present; otherwise builds and writes it.
// A cache file that fails to parse is rebuilt.
SemigroupTable cached_build(const std::filesystem::path& dir, int n, Kind which,
                            const BuildOptions& options = {});

std::filesystem::path cache_path(const std::filesystem::path& dir, int n, std::string_view kind);

}  // namespace fencemonoid
