#pragma once

#include <stdexcept>
#include <string>

namespace ldaroc {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function (non-finite input,
// probability outside the open unit interval, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

// Half-space with a zero normal vector.
class DegenerateHalfSpace : public Error {
public:
    using Error::Error;
};

// Operation needs a model whose classes are separated (scale > 0).
class DegenerateModel : public Error {
public:
    using Error::Error;
};

// Input data violates a structural requirement (missing class, too few rows,
// labels outside {0, 1}).
class DataError : public Error {
public:
    using Error::Error;
};

}  // namespace ldaroc
