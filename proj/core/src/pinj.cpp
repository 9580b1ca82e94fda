#include "fencemonoid/pinj.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

#include "fencemonoid/error.hpp"

namespace fencemonoid {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateSource: return "DuplicateSource";
    case ErrorCode::DuplicateTarget: return "DuplicateTarget";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotInIF: return "NotInIF";
    case ErrorCode::NotJRelated: return "NotJRelated";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::NotSubset: return "NotSubset";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::OddAmbient: return "OddAmbient";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::MalformedBlockForm: return "MalformedBlockForm";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

void check_degree(int n) {
  if (n < 0 || n > kMaxDegree) {
    throw Error(ErrorCode::OutOfRange,
                "degree " + std::to_string(n) + " outside 0.." + std::to_string(kMaxDegree));
  }
}

void check_point(int n, int x) {
  if (x < 1 || x > n) {
    throw Error(ErrorCode::OutOfRange,
                "point " + std::to_string(x) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

PartialInjection::PartialInjection(int n) {
  check_degree(n);
  n_ = static_cast<std::uint8_t>(n);
}

PartialInjection PartialInjection::identity(int n) {
  PartialInjectionBuilder b(n);
  for (int x = 1; x <= n; ++x) b.set(x, x);
  return b.value();
}

int PartialInjection::rank() const noexcept {
  return std::popcount(domain_set());
}

PointSet PartialInjection::domain_set() const noexcept {
  PointSet s = 0;
  for (int x = 1; x <= n_; ++x) {
    if (img_[x] != 0) s |= PointSet{1} << x;
  }
  return s;
}

PointSet PartialInjection::image_set() const noexcept {
  PointSet s = 0;
  for (int x = 1; x <= n_; ++x) {
    if (img_[x] != 0) s |= PointSet{1} << img_[x];
  }
  return s;
}

std::vector<int> PartialInjection::domain() const { return points_of(domain_set()); }
std::vector<int> PartialInjection::image() const { return points_of(image_set()); }

bool PartialInjection::is_partial_identity() const noexcept {
  for (int x = 1; x <= n_; ++x) {
    if (img_[x] != 0 && img_[x] != x) return false;
  }
  return true;
}

std::size_t PartialInjection::hash() const noexcept {
  // FNV-1a over the live prefix of the table.
  std::uint64_t h = 1469598103934665603ULL ^ n_;
  for (int x = 1; x <= n_; ++x) {
    h ^= img_[x];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

PartialInjection make(int n, std::span<const Assignment> pairs) {
  check_degree(n);
  PartialInjectionBuilder b(n);
  PointSet targets = 0;
  for (auto [x, y] : pairs) {
    check_point(n, x);
    check_point(n, y);
    if (b[x] != 0) {
      throw Error(ErrorCode::DuplicateSource, "point " + std::to_string(x) + " assigned twice");
    }
    if (contains(targets, y)) {
      throw Error(ErrorCode::DuplicateTarget, "target " + std::to_string(y) + " hit twice");
    }
    targets |= PointSet{1} << y;
    b.set(x, y);
  }
  return b.value();
}

PartialInjection make(int n, std::initializer_list<Assignment> pairs) {
  return make(n, std::span<const Assignment>(pairs.begin(), pairs.size()));
}

PartialInjection compose(const PartialInjection& a, const PartialInjection& b) {
  if (a.n_ != b.n_) {
    throw Error(ErrorCode::SizeMismatch, "compose: degrees " + std::to_string(a.n_) + " and " +
                                             std::to_string(b.n_));
  }
  PartialInjection r;
  r.n_ = a.n_;
  for (int x = 1; x <= a.n_; ++x) r.img_[x] = b.img_[a.img_[x]];
  return r;
}

PartialInjection inverse(const PartialInjection& a) {
  PartialInjection r;
  r.n_ = a.n_;
  for (int x = 1; x <= a.n_; ++x) {
    if (a.img_[x] != 0) r.img_[a.img_[x]] = static_cast<std::uint8_t>(x);
  }
  return r;
}

PartialInjection identity_on(int n, std::span<const int> points) {
  check_degree(n);
  PartialInjectionBuilder b(n);
  for (int x : points) {
    check_point(n, x);
    b.set(x, x);
  }
  return b.value();
}

PartialInjection identity_on(int n, std::initializer_list<int> points) {
  return identity_on(n, std::span<const int>(points.begin(), points.size()));
}

PartialInjection identity_on_set(int n, PointSet points) {
  check_degree(n);
  if ((points & ~((PointSet{2} << n) - 2)) != 0) {
    throw Error(ErrorCode::OutOfRange, "identity_on_set: points outside 1..n");
  }
  PartialInjectionBuilder b(n);
  for (int x = 1; x <= n; ++x) {
    if (contains(points, x)) b.set(x, x);
  }
  return b.value();
}

CanonicalKey canonical_key(const PartialInjection& a) {
  CanonicalKey key{};
  key[0] = static_cast<std::uint8_t>(a.degree());
  for (int x = 1; x <= a.degree(); ++x) key[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(a[x]);
  return key;
}

std::string to_string(const PartialInjection& a) {
  std::string out = "n=" + std::to_string(a.degree()) + ":[";
  bool first = true;
  for (int x = 1; x <= a.degree(); ++x) {
    if (a[x] == 0) continue;
    if (!first) out += ' ';
    first = false;
    out += std::to_string(x);
    out += '>';
    out += std::to_string(a[x]);
  }
  out += ']';
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void expect(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }

  int integer() {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + pos_) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, why + " at offset " + std::to_string(pos_) + " in '" +
                                      std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PartialInjection parse_pinj(std::string_view text) {
  Cursor c(text);
  c.skip_space();
  c.expect("n=");
  int n = c.integer();
  c.expect(":[");
  std::vector<Assignment> pairs;
  c.skip_space();
  while (!c.peek(']')) {
    if (c.done()) c.fail("unterminated element");
    int x = c.integer();
    c.expect(">");
    int y = c.integer();
    pairs.emplace_back(x, y);
    c.skip_space();
  }
  c.expect("]");
  c.skip_space();
  if (!c.done()) c.fail("trailing characters");
  return make(n, pairs);
}

PointSet point_set(std::span<const int> points) {
  PointSet s = 0;
  for (int x : points) {
    if (x < 1 || x > kMaxDegree) throw Error(ErrorCode::OutOfRange, "point " + std::to_string(x));
    s |= PointSet{1} << x;
  }
  return s;
}

std::vector<int> points_of(PointSet set) {
  std::vector<int> out;
  while (set != 0) {
    int x = std::countr_zero(set);
    out.push_back(x);
    set &= set - 1;
  }
  return out;
}

}  // namespace fencemonoid
