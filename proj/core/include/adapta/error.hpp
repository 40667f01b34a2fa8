#pragma once

#include <stdexcept>
#include <string>

namespace adapta {

/// Base for every failure raised by the library. Modules derive narrower
/// types carrying the offending datum (line number, joint, user id...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace adapta
