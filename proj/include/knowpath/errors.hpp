#pragma once

#include <stdexcept>
#include <string>

namespace knowpath {

/// Raised when an input file violates its declared format. Messages carry
/// `path:line:` context where a line is known.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace knowpath
