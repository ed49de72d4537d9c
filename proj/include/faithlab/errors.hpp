#ifndef FAITHLAB_ERRORS_HPP
#define FAITHLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace faithlab {

// A model or graph violates a structural invariant (CLI exit code 2).
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed the configured vertex limit (CLI exit code 3).
class size_limit_error : public std::runtime_error {
public:
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace faithlab

#endif
