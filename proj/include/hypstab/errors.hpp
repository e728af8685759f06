#pragma once

#include <stdexcept>
#include <string>

namespace hypstab {

// Bad user input: config file, CLI flags, out-of-range parameters.
class ConfigError : public std::runtime_error {
 public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Runtime numerical failure: singular boundary closure, diverging run.
class NumericalError : public std::runtime_error {
 public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hypstab
