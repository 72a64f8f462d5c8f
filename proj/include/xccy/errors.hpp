#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace xccy {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: malformed files, unknown identifiers, inconsistent requests.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// A numerical routine could not complete (no bracket, singular ratio, ...).
class SolverError : public Error {
public:
    explicit SolverError(const std::string& what) : Error(what) {}
};

} // namespace xccy

#define XCCY_REQUIRE(cond, msg)                                                                                       \
    do {                                                                                                              \
        if (!(cond)) {                                                                                                \
            std::ostringstream xccy_os_;                                                                              \
            xccy_os_ << msg;                                                                                          \
            throw xccy::Error(xccy_os_.str());                                                                        \
        }                                                                                                             \
    } while (0)

#define XCCY_INPUT_REQUIRE(cond, msg)                                                                                 \
    do {                                                                                                              \
        if (!(cond)) {                                                                                                \
            std::ostringstream xccy_os_;                                                                              \
            xccy_os_ << msg;                                                                                          \
            throw xccy::InputError(xccy_os_.str());                                                                   \
        }                                                                                                             \
    } while (0)
