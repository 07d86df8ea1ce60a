#ifndef PRODMATCH_ERRORS_HPP
#define PRODMATCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prodmatch {

/// Invalid argument or malformed input (CLI exit code 2).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An instance exceeds a configured enumeration/search cap (CLI exit code 3).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace prodmatch

#endif
