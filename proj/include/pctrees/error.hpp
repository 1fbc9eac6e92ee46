#pragma once

#include <stdexcept>
#include <string>

namespace pctrees {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The comparison graph has more than one component; no ranking exists.
class NotConnectedError : public Error {
 public:
  using Error::Error;
};

/// Enumeration refused because the exact tree count exceeds the cap.
class TooManyTreesError : public Error {
 public:
  TooManyTreesError(std::string exact_count, std::string upper_bound, unsigned long long cap)
      : Error("too many spanning trees: exact count " + exact_count + " (upper bound " + upper_bound +
              ") exceeds cap " + std::to_string(cap)),
        exact_count_(std::move(exact_count)),
        upper_bound_(std::move(upper_bound)),
        cap_(cap) {}

  const std::string& exact_count() const noexcept { return exact_count_; }
  const std::string& upper_bound() const noexcept { return upper_bound_; }
  unsigned long long cap() const noexcept { return cap_; }

 private:
  std::string exact_count_;
  std::string upper_bound_;
  unsigned long long cap_;
};

/// A tree edge has no preference or confidence entry.
class MissingEntryError : public Error {
 public:
  using Error::Error;
};

/// Fuzzy arithmetic outside the domain where Table-style approximations hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Every spanning tree has zero reliability, so aggregation weights are undefined.
class ZeroReliabilityError : public Error {
 public:
  using Error::Error;
};

class InfeasibleModelError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Malformed problem or report file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pctrees
