#pragma once

#include <stdexcept>
#include <string>

namespace cfk {

// Error taxonomy used across the kernel. The CLI maps these to exit codes:
// parse_error -> 1, domain_error -> 2, precision_error -> 3.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cfk
