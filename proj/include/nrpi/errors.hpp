#pragma once

#include <stdexcept>
#include <string>

namespace nrpi {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotHermitianError : Error {
    explicit NotHermitianError(const std::string& msg) : Error(msg) {}
};

struct NoConvergenceError : Error {
    explicit NoConvergenceError(const std::string& msg) : Error(msg) {}
};

struct InvalidSpecError : Error {
    explicit InvalidSpecError(const std::string& msg) : Error(msg) {}
};

struct InvalidRankError : Error {
    explicit InvalidRankError(const std::string& msg) : Error(msg) {}
};

struct InvalidKError : Error {
    explicit InvalidKError(const std::string& msg) : Error(msg) {}
};

struct GridUnstableError : Error {
    explicit GridUnstableError(const std::string& msg) : Error(msg) {}
};

struct NotTriangularError : Error {
    explicit NotTriangularError(const std::string& msg) : Error(msg) {}
};

struct ReducibleInputError : Error {
    explicit ReducibleInputError(const std::string& msg) : Error(msg) {}
};

}  // namespace nrpi
