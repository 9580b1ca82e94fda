#include "fencemonoid/cache.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fencemonoid/error.hpp"

namespace fencemonoid {

namespace {

constexpr std::string_view kMagic = "FENCEMONOID";
constexpr std::string_view kVersion = "v1";

bool closed_kind(std::string_view kind) {
  return kind == "I" || kind == "PFI" || kind == "IF" || kind.starts_with("closure-");
}

std::string field(std::istringstream& header, std::string_view name) {
  std::string token;
  if (!(header >> token) || !token.starts_with(name) || token.size() <= name.size() ||
      token[name.size()] != '=') {
    throw Error(ErrorCode::Parse, "table header: expected " + std::string(name) + "=...");
  }
  return token.substr(name.size() + 1);
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "table header: bad number '" + s + "'");
  }
}

}  // namespace

void write_table(std::ostream& out, const SemigroupTable& table, std::string_view kind) {
  out << kMagic << ' ' << kVersion << " n=" << table.degree() << " kind=" << kind
      << " count=" << table.size() << '\n';
  for (const auto& a : table) out << to_string(a) << '\n';
}

StoredTable read_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::Parse, "empty table file");
  std::istringstream header(line);
  std::string magic, version;
  header >> magic >> version;
  if (magic != kMagic || version != kVersion) {
    throw Error(ErrorCode::Parse, "not a " + std::string(kMagic) + " " + std::string(kVersion) +
                                      " table");
  }
  int n = to_int(field(header, "n"));
  std::string kind = field(header, "kind");
  int count = to_int(field(header, "count"));

  std::vector<PartialInjection> elems;
  elems.reserve(static_cast<std::size_t>(count));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    PartialInjection a = parse_pinj(line);
    if (a.degree() != n) throw Error(ErrorCode::Parse, "element of wrong degree: " + line);
    elems.push_back(a);
  }
  if (elems.size() != static_cast<std::size_t>(count)) {
    throw Error(ErrorCode::Parse, "count mismatch: header says " + std::to_string(count) +
                                      ", found " + std::to_string(elems.size()));
  }
  auto table = SemigroupTable::from_elements(n, std::move(elems), closed_kind(kind));
  if (table.size() != static_cast<std::size_t>(count)) {
    throw Error(ErrorCode::Parse, "duplicate elements in table");
  }
  return {std::move(table), std::move(kind)};
}

std::string generators_digest(std::span<const PartialInjection> gens) {
  std::vector<PartialInjection> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& g : sorted) {
    for (char c : to_string(g)) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    h ^= '\n';
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::filesystem::path cache_path(const std::filesystem::path& dir, int n, std::string_view kind) {
  return dir / (std::string(kind) + "-n" + std::to_string(n) + ".fm");
}

SemigroupTable cached_build(const std::filesystem::path& dir, int n, Kind which,
                            const BuildOptions& options) {
  const auto path = cache_path(dir, n, to_string(which));
  if (std::ifstream in{path}) {
    try {
      auto stored = read_table(in);
      if (stored.table.degree() == n && stored.kind == to_string(which)) {
        return std::move(stored.table);
      }
    } catch (const Error&) {
      // fall through and rebuild
    }
  }
  SemigroupTable table = build(n, which, options);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create cache directory " + dir.string());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp);
    write_table(out, table, to_string(which));
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot move cache file into " + path.string());
  return table;
}

}  // namespace fencemonoid
