#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fencemonoid {

enum class ErrorCode {
  DuplicateSource,
  DuplicateTarget,
  OutOfRange,
  SizeMismatch,
  NotInIF,
  NotJRelated,
  TooLarge,
  NotMember,
  NotSubset,
  BadIndex,
  OddAmbient,
  BadIndices,
  KindMismatch,
  MalformedBlockForm,
  Parse,
  Io,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported as an Error carrying a machine-readable
// code, so the CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fencemonoid
