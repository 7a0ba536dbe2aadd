#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pae {

enum class ErrorCode {
  FileNotFound,
  NotAPdf,
  EncryptedUnsupported,
  PageOutOfRange,
  MalformedContentStream,
  RenderFailure,
  PreconditionViolation,
  EngineUnavailable,
  EngineFailure,
  EmptyText,
  WrongModality,
  EmptyImage,
  UnsupportedFormat,
  BackendUnavailable,
  BackendRejected,
  EmptyValue,
  MixedPages,
  ProviderUnavailable,
  DimensionMismatch,
  ZeroVector,
  SchemaViolation,
  MissingPages,
  ConfigInvalid,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library carries one of the codes above so
// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pae
