#ifndef SUBSHIFT_ERRORS_HPP
#define SUBSHIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subshift {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownGeneratorError : Error {
  explicit UnknownGeneratorError(const std::string& name)
      : Error("unknown generator: '" + name + "'") {}
};

struct ResourceLimitError : Error {
  using Error::Error;
};

struct InconsistentCodingError : Error {
  using Error::Error;
};

struct GroupMismatchError : Error {
  using Error::Error;
};

struct NotASubgroupEmbeddingError : Error {
  using Error::Error;
};

struct NotNearestNeighborError : Error {
  using Error::Error;
};

struct UnknownVertexError : Error {
  using Error::Error;
};

struct DisconnectedError : Error {
  using Error::Error;
};

struct EqualEndpointsError : Error {
  using Error::Error;
};

struct BudgetExceededError : Error {
  using Error::Error;
};

struct TargetUnreachableError : Error {
  using Error::Error;
};

struct WindowEscapeError : Error {
  using Error::Error;
};

struct SupportTooLargeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace subshift

#endif
