#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flagheight {

/// Malformed group, parabolic or weight specification.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input that is mathematically inadmissible (non-ample weight,
/// non-root argument, irregular localization vector, ...).
class MathInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration would exceed the configured size cap.
class SizeCapError : public std::length_error {
 public:
  SizeCapError(const std::string& what_enumerated, std::uint64_t size, std::uint64_t cap)
      : std::length_error(what_enumerated + " has " + std::to_string(size) +
                          " elements, exceeding the cap of " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::uint64_t size() const { return size_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t size_;
  std::uint64_t cap_;
};

/// Two independent computations that must agree did not.
class CrossCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace flagheight
