#pragma once

#include <stdexcept>
#include <string>

namespace braidkit {

// Thrown when an intermediate free word or a reduction run exceeds the
// configured resource caps.  Callers map this to a distinct exit status.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace braidkit
