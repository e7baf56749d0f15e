#ifndef RELSENT_ERRORS_HPP
#define RELSENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relsent {

// Exit-code mapping used by the CLI: UsageError -> 1, DataError -> 2,
// NumericError -> 3.

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace relsent

#endif
