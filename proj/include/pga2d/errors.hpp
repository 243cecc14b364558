#pragma once

#include <stdexcept>
#include <string>

namespace pga2d {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An element is euclidean where an ideal one was required, or vice versa.
class ClassificationError : public Error {
public:
  using Error::Error;
};

// Arguments outside the domain of an operation (zero elements, parallel
// lines passed to an angle-only formula, non-incident inputs, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

} // namespace pga2d
