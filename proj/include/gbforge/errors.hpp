#ifndef GBFORGE_ERRORS_HPP
#define GBFORGE_ERRORS_HPP

#include <stdexcept>

namespace gbforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct RingMismatchError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// A configured work budget (S-pair count, oracle candidates, ...) ran out.
struct BudgetExceededError : Error { using Error::Error; };

// Degree-capped resampling failed too many times in a row.
struct ResampleExhaustedError : Error { using Error::Error; };

// A generated record failed its own consistency checks; indicates a bug,
// not bad input.
struct VerificationError : Error { using Error::Error; };

} // namespace gbforge

#endif
