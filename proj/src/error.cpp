#include "pae/error.hpp"

namespace pae {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::NotAPdf: return "NotAPdf";
    case ErrorCode::EncryptedUnsupported: return "EncryptedUnsupported";
    case ErrorCode::PageOutOfRange: return "PageOutOfRange";
    case ErrorCode::MalformedContentStream: return "MalformedContentStream";
    case ErrorCode::RenderFailure: return "RenderFailure";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::EngineUnavailable: return "EngineUnavailable";
    case ErrorCode::EngineFailure: return "EngineFailure";
    case ErrorCode::EmptyText: return "EmptyText";
    case ErrorCode::WrongModality: return "WrongModality";
    case ErrorCode::EmptyImage: return "EmptyImage";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::BackendUnavailable: return "BackendUnavailable";
    case ErrorCode::BackendRejected: return "BackendRejected";
    case ErrorCode::EmptyValue: return "EmptyValue";
    case ErrorCode::MixedPages: return "MixedPages";
    case ErrorCode::ProviderUnavailable: return "ProviderUnavailable";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::MissingPages: return "MissingPages";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace pae
