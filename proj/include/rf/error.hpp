#pragma once

#include <stdexcept>
#include <string>

namespace rf {

// Invalid input or a request outside the supported domain.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact identity that should hold failed to hold.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rf
