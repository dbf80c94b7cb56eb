#ifndef LOGTEV_ERRORS_HPP
#define LOGTEV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace logtev {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two ring values with different generator counts were combined.
struct ContextError : Error {
  using Error::Error;
};

/// invert_unit on a polynomial whose constant term is not a unit.
struct NotInvertibleError : Error {
  using Error::Error;
};

/// A bundle was presented with an empty root list.
struct RankError : Error {
  using Error::Error;
};

/// A Segre piece beyond the precomputed range was requested.
struct TruncationError : Error {
  using Error::Error;
};

/// Tangency data failed validation.
struct ValidationError : Error {
  using Error::Error;
};

struct DegreeMismatchError : ValidationError {
  using ValidationError::ValidationError;
};

struct IndivisibleError : ValidationError {
  using ValidationError::ValidationError;
};

struct NegativeTwistError : ValidationError {
  using ValidationError::ValidationError;
};

struct NonPositivePartError : ValidationError {
  using ValidationError::ValidationError;
};

/// The symbolic integral and the closed formula disagreed. This is an
/// engine bug, never a valid state.
struct CrossCheckError : Error {
  using Error::Error;
};

/// Excess correction requested for tangency data outside the supported
/// configuration.
struct ConfigurationError : Error {
  using Error::Error;
};

}  // namespace logtev

#endif
