#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hexcut {

enum class ErrorKind {
  InvalidParams,
  VertexOutOfRange,
  EmptySubset,
  ConstructionInvariantViolated,
  KOutOfRange,
  SizeLimitExceeded,
  TFacetInvariantViolated,
  TFacetNotFound,
  OrdinalOutOfRange,
  IncompleteOrder,
  BetaZero,
  UnverifiedOrder,
  ResourceGuard,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::ConstructionInvariantViolated: return "ConstructionInvariantViolated";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::TFacetInvariantViolated: return "TFacetInvariantViolated";
    case ErrorKind::TFacetNotFound: return "TFacetNotFound";
    case ErrorKind::OrdinalOutOfRange: return "OrdinalOutOfRange";
    case ErrorKind::IncompleteOrder: return "IncompleteOrder";
    case ErrorKind::BetaZero: return "BetaZero";
    case ErrorKind::UnverifiedOrder: return "UnverifiedOrder";
    case ErrorKind::ResourceGuard: return "ResourceGuard";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hexcut
