#pragma once

#include <stdexcept>
#include <string>

namespace gpmix {

// Invalid configuration or input (CLI maps this to exit code 2).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed to converge (CLI maps this to exit code 3).
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap would be exceeded (CLI maps this to exit code 4).
class ResourceCapError : public std::runtime_error {
  public:
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gpmix
