#pragma once

#include <stdexcept>
#include <string>

namespace ogl {

// Bad user input: CLI flags, config files, distribution/pattern specs,
// malformed edge-list files. CLI maps this to exit code 1.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A size/enumeration/domain guard tripped at runtime (pattern too large,
// enumeration bound exceeded, sampled layer larger than n, ...).
// CLI maps this to exit code 3.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ogl
