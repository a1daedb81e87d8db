#pragma once

#include <stdexcept>
#include <string>

namespace hforge {

struct RankDeficientError : std::runtime_error {
    explicit RankDeficientError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InconsistentError : std::runtime_error {
    explicit InconsistentError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SearchTooLargeError : std::runtime_error {
    explicit SearchTooLargeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MissingTableEntryError : std::runtime_error {
    explicit MissingTableEntryError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnstableKeyError : std::invalid_argument {
    explicit UnstableKeyError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct NotApplicableError : std::invalid_argument {
    explicit NotApplicableError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace hforge
