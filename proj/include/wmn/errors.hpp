#pragma once

#include <stdexcept>
#include <string>

namespace wmn {

// Invalid input or violated model invariant. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured resource cap was exceeded. The CLI maps this to exit code 2.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wmn
