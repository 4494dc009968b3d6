#pragma once

#include <stdexcept>
#include <string>

namespace cstarmod {

// Base class for all contract violations raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class NotHermitian : public Error {
public:
    explicit NotHermitian(const std::string& what) : Error(what) {}
};

class NotPSD : public Error {
public:
    explicit NotPSD(const std::string& what) : Error(what) {}
};

class AlgebraMismatch : public Error {
public:
    explicit AlgebraMismatch(const std::string& what) : Error(what) {}
};

class ModuleMismatch : public Error {
public:
    explicit ModuleMismatch(const std::string& what) : Error(what) {}
};

class NotComparable : public Error {
public:
    explicit NotComparable(const std::string& what) : Error(what) {}
};

class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

// Malformed or invalid interchange documents (see json_io.hpp).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace cstarmod
