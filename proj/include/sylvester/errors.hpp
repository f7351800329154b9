#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sylvester {

/// Broad failure families. The CLI maps Validation to exit code 2 and
/// Resource to exit code 3.
enum class ErrorCategory { Validation, Resource };

class Error : public std::runtime_error {
 public:
  Error(std::string_view kind, ErrorCategory category, const std::string& what)
      : std::runtime_error(std::string(kind) + ": " + what), kind_(kind), category_(category) {}

  std::string_view kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return category_; }

 private:
  std::string_view kind_;
  ErrorCategory category_;
};

#define SYLVESTER_DEFINE_ERROR(Name, Category)                                   \
  class Name : public Error {                                                    \
   public:                                                                       \
    explicit Name(const std::string& what) : Error(#Name, Category, what) {}    \
  };

SYLVESTER_DEFINE_ERROR(InvalidArgument, ErrorCategory::Validation)
SYLVESTER_DEFINE_ERROR(ParseError, ErrorCategory::Validation)
SYLVESTER_DEFINE_ERROR(InvalidPrefix, ErrorCategory::Validation)
SYLVESTER_DEFINE_ERROR(NotFullWord, ErrorCategory::Validation)
SYLVESTER_DEFINE_ERROR(InvalidSubset, ErrorCategory::Validation)
SYLVESTER_DEFINE_ERROR(MalformedTableau, ErrorCategory::Validation)
SYLVESTER_DEFINE_ERROR(InvalidRegion, ErrorCategory::Validation)
SYLVESTER_DEFINE_ERROR(DegenerateConfiguration, ErrorCategory::Validation)
SYLVESTER_DEFINE_ERROR(RetriesExhausted, ErrorCategory::Resource)
SYLVESTER_DEFINE_ERROR(ResourceLimit, ErrorCategory::Resource)
SYLVESTER_DEFINE_ERROR(CheckpointMismatch, ErrorCategory::Resource)
SYLVESTER_DEFINE_ERROR(Interrupted, ErrorCategory::Resource)

#undef SYLVESTER_DEFINE_ERROR

}  // namespace sylvester
