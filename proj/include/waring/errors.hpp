#pragma once

#include <stdexcept>

namespace waring {

/// Raised when an operation's preconditions on its arguments are violated
/// (mismatched field orders, out-of-range indices, malformed tuples).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

}  // namespace waring
