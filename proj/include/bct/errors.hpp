#pragma once

#include <stdexcept>
#include <string>

namespace bct {

/// Invalid data, violated precondition or malformed file contents.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem / stream failure.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bct
